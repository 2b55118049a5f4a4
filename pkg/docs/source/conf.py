# -*- coding: utf-8 -*-
#
# Kahlerlens documentation build configuration file.

import sys
import os

sys.path.insert(0, os.path.abspath('../..'))

from kahlerlens import __version__ as version  # noqa: E402

extensions = [
    'sphinx.ext.autodoc',
    'numpydoc'
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'Kahlerlens'
copyright = u'2026, The kahlerlens developers'
author = u'The kahlerlens developers'
release = version

exclude_patterns = []
pygments_style = 'sphinx'
todo_include_todos = False

html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']
htmlhelp_basename = 'Kahlerlensdoc'

latex_documents = [
    (master_doc, 'Kahlerlens.tex', u'Kahlerlens Documentation',
     author, 'manual'),
]

man_pages = [
    (master_doc, 'kahlerlens', u'Kahlerlens Documentation',
     [author], 1)
]

texinfo_documents = [
    (master_doc, 'Kahlerlens', u'Kahlerlens Documentation',
     author, 'Kahlerlens', 'Exact Monge-Ampere polynomial solutions.',
     'Miscellaneous'),
]
