# Configuration file for the Sphinx documentation builder.
#
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Path setup --------------------------------------------------------------

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

from depthtwo.__version__ import __version__, __version_major__  # noqa: E402


# -- Project information -----------------------------------------------------

project = 'depthtwo'
copyright = '2021, Le Tuan Anh <tuananh.ke@gmail.com>'
author = 'Le Tuan Anh <tuananh.ke@gmail.com>'
version = __version_major__
release = __version__


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'sphinx.ext.mathjax',
]

autodoc_member_order = 'bysource'
autodoc_default_options = {
    'members': True,
    'undoc-members': False,
    'show-inheritance': True,
}

templates_path = ['_templates']
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']


# -- Options for HTML output -------------------------------------------------

html_theme = 'alabaster'
html_theme_options = {
    'description': 'Depth two extensions, bialgebroids and weak Hopf algebras in exact arithmetic',
    'github_user': 'letuananh',
    'github_repo': 'depthtwo',
}
html_static_path = []
