from __future__ import absolute_import
from catcoend.fincat import FinCat, FinFunctor, SetFunctor
from catcoend.coends import Bifunctor
from catcoend.config import RunConfig, load_config
