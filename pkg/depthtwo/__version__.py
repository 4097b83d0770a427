# -*- coding: utf-8 -*-

# depthtwo's package version information
__author__ = "Le Tuan Anh"
__email__ = "tuananh.ke@gmail.com"
__copyright__ = "Copyright 2021, depthtwo"
__credits__ = []
__license__ = "MIT License"
__description__ = "Exact-arithmetic lab for depth two extensions, bialgebroids, Hopf-Galois and weak Hopf algebras."
__url__ = "https://github.com/letuananh/depthtwo/"
__maintainer__ = "Le Tuan Anh"
__version_major__ = "0.1"
__version__ = "{}a1".format(__version_major__)
__version_long__ = "{} - Alpha 1".format(__version_major__)
__status__ = "3 - Alpha"
