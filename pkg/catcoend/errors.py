# -*- coding: utf-8 -*-


class CatCoendError(Exception):
    pass


class CategoryError(CatCoendError):
    pass


class FunctorError(CatCoendError):
    pass


class ShapeError(CatCoendError):
    pass


class ConventionError(CatCoendError):
    pass


class BudgetExceeded(CatCoendError):
    pass


class TruncationError(CatCoendError):
    pass


class ParseError(CatCoendError):
    pass
