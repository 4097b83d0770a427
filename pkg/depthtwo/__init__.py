# -*- coding: utf-8 -*-

'''
depthtwo - exact computations with depth two extensions, bialgebroids, Hopf-Galois and weak Hopf algebras.

Latest version can be found at https://github.com/letuananh/depthtwo

@author: Le Tuan Anh <tuananh.ke@gmail.com>
@license: MIT
'''

# This source code is a part of depthtwo library: https://github.com/letuananh/depthtwo
# Copyright (c) 2021, Le Tuan Anh <tuananh.ke@gmail.com>
# license: MIT

########################################################################

from .__version__ import __author__, __email__, __copyright__, __maintainer__
from .__version__ import __credits__, __license__, __description__, __url__
from .__version__ import __version_major__, __version_long__, __version__, __status__

from .errors import DepthTwoError, DimensionMismatch, InvalidStructure, VerificationError, NotApplicable, SchemaError
from .linalg import FieldSpec, QQ_FIELD, Matrix, Subspace, solve_linear, kernel
from .report import Report, CheckResult
from .algebra import StructureAlgebra, Subalgebra, Extension, FiniteGroup, Groupoid
from .algebra import centralizer, subgroup_extension, identity_extension, group_algebra, matrix_algebra
from .tensor import TensorSpace, tensor_over
from .context import ExtensionContext, with_ctx
from .depth import is_d2, find_right_quasibase, find_left_quasibase, verify_quasibase
from .bialgebroid import Bialgebroid, build_T, build_S, full_check, verify_duality
from .galois import canonical_coaction, galois_map, characterize, split_monic_check, analyze_extension
from .bialgebra import WeakBialgebra, WeakHopfAlgebra, HopfAlgebra, group_hopf, matrix_weak_hopf, sweedler4
from .hopf import HopfSubalgebra, is_normal, hopf_galois, normality_theorem_harness
from .weakhopf import counital_projections, WeakComoduleAlgebra, weak_galois, reconstruct_antipode, weak_hopf_pipeline

__all__ = ["DepthTwoError", "DimensionMismatch", "InvalidStructure", "VerificationError", "NotApplicable", "SchemaError",
           "FieldSpec", "QQ_FIELD", "Matrix", "Subspace", "solve_linear", "kernel", "Report", "CheckResult",
           "StructureAlgebra", "Subalgebra", "Extension", "FiniteGroup", "Groupoid",
           "centralizer", "subgroup_extension", "identity_extension", "group_algebra", "matrix_algebra",
           "TensorSpace", "tensor_over", "ExtensionContext", "with_ctx",
           "is_d2", "find_right_quasibase", "find_left_quasibase", "verify_quasibase",
           "Bialgebroid", "build_T", "build_S", "full_check", "verify_duality",
           "canonical_coaction", "galois_map", "characterize", "split_monic_check", "analyze_extension",
           "WeakBialgebra", "WeakHopfAlgebra", "HopfAlgebra", "group_hopf", "matrix_weak_hopf", "sweedler4",
           "HopfSubalgebra", "is_normal", "hopf_galois", "normality_theorem_harness",
           "counital_projections", "WeakComoduleAlgebra", "weak_galois", "reconstruct_antipode", "weak_hopf_pipeline",
           "__version__", "__author__", "__description__", "__copyright__"]
