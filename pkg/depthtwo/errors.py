# -*- coding: utf-8 -*-

"""
Exceptions raised by depthtwo
"""

# This source code is a part of depthtwo library: https://github.com/letuananh/depthtwo
# Copyright (c) 2021, Le Tuan Anh <tuananh.ke@gmail.com>
# license: MIT


class DepthTwoError(Exception):
    """ Base class of every error raised by depthtwo """


class DimensionMismatch(DepthTwoError, ValueError):
    """ Vector, matrix or ambient sizes do not agree """


class InvalidStructure(DepthTwoError, ValueError):
    """ Input data does not describe the claimed structure (table, subalgebra, ideal ...) """


class VerificationError(DepthTwoError):
    """ A constructed object failed its own defining identities """


class NotApplicable(DepthTwoError):
    """ The prerequisites of an operation are not met by this instance """


class SchemaError(DepthTwoError, ValueError):
    """ Malformed JSON input or unknown registry name """
