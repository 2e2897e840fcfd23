#!/usr/bin/env python
# -*- coding: utf-8 -*-
from __future__ import print_function

import sys

from catcoend.cli import main

if __name__ == '__main__':
    sys.exit(main())
