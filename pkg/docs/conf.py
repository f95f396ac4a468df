# -*- coding: utf-8 -*-
#
# homdensity documentation build configuration file.

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

import homdensity

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
]

source_suffix = '.rst'
master_doc = 'index'

project = 'homdensity'
copyright = '2026, homdensity contributors'
author = 'homdensity contributors'

version = homdensity.__version__
release = homdensity.__version__

language = None

exclude_patterns = ['_build', 'api/homdensity.tests*']

pygments_style = 'sphinx'

todo_include_todos = True

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'

htmlhelp_basename = 'homdensitydoc'

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'homdensity', 'homdensity Documentation',
     [author], 1)
]

# -- Options for Texinfo output -------------------------------------------

texinfo_documents = [
    (master_doc, 'homdensity', 'homdensity Documentation',
     author, 'homdensity', 'Exact graph homomorphism counts and densities.',
     'Miscellaneous'),
]
