# -*- coding: utf-8 -*-
#
# wittmod documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys, os

# wittmod is imported from the source tree, not an installed copy.
sys.path = [os.path.abspath('..')] + sys.path

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.todo', 'sphinx.ext.coverage',
              'sphinx.ext.mathjax']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'wittmod'
copyright = u'2026, The wittmod developers'

from wittmod.version import version
from wittmod.version import release

exclude_patterns = ['_build']
pygments_style = 'sphinx'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'wittmoddoc'

# -- Options for LaTeX output --------------------------------------------------

latex_elements = {
}

latex_documents = [
  ('index', 'wittmod.tex', u'wittmod Documentation',
   u'The wittmod developers', 'manual'),
]

# -- Options for manual page output --------------------------------------------

man_pages = [
    ('index', 'wittmod', u'wittmod Documentation',
     [u'The wittmod developers'], 1)
]

# -- Options for Texinfo output ------------------------------------------------

texinfo_documents = [
  ('index', 'wittmod', u'wittmod Documentation',
   u'The wittmod developers', 'wittmod',
   'Exact computations with Witt algebra modules.', 'Miscellaneous'),
]
