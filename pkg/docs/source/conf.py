# -*- coding: utf-8 -*-
#
# qcollatz documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing
# dir.

import sys, os

# The package is imported from the source tree for autodoc.
sys.path.append(os.path.abspath('../..'))

# -- General configuration -----------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.todo',
              'sphinx.ext.coverage', 'sphinx.ext.mathjax',
              'sphinx.ext.viewcode']

templates_path = ['.templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'qcollatz'
copyright = u'2026, the qcollatz developers'

version = '0.1'
release = '0.1.0'

exclude_patterns = []
pygments_style = 'sphinx'

# -- Options for HTML output ---------------------------------------------

html_theme = 'default'
html_static_path = ['.static']
htmlhelp_basename = 'qcollatzdoc'

# -- Options for LaTeX output --------------------------------------------

latex_documents = [
  ('index', 'qcollatz.tex', u'qcollatz Documentation',
   u'the qcollatz developers', 'manual'),
]

# -- Options for manual page output --------------------------------------

man_pages = [
    ('index', 'qcollatz', u'qcollatz Documentation',
     [u'the qcollatz developers'], 1)
]
