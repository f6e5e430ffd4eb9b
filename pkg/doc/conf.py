# -*- coding: utf-8 -*-
#
# knotforge documentation build configuration file.

import os
import sys
from datetime import datetime

version = open("../VERSION.txt").read().strip()

# The package is importable from the source tree without installing it.
sys.path.insert(0, os.path.abspath('..'))

needs_sphinx = '1.5.3'

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.autosectionlabel',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'knotforge: Fourier knots from Lissajous shadows'
author = 'The knotforge contributors'
copyright = u'{0}, {1}'.format(datetime.now().year, author)
release = version

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

# Keep member order as written; modules read bottom-up.
autodoc_member_order = 'bysource'

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'knotforge'

latex_documents = [
    (master_doc, 'knotforge.tex', 'knotforge Documentation', author, 'manual'),
]

man_pages = [
    (master_doc, 'knotforge', 'knotforge Documentation', [author], 1)
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
    'sympy': ('https://docs.sympy.org/latest', None),
    'mpmath': ('https://mpmath.org/doc/current', None),
}
