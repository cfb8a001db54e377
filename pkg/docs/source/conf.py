#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# Biposets documentation build configuration file.

from datetime import date

extensions = []

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = 'Biposets'
copyright = '%s, The biposets authors' % date.today().year
author = 'The biposets authors'

version = "0.1"
release = "0.1.0"

language = 'en'

exclude_patterns = []

pygments_style = 'sphinx'

todo_include_todos = False

html_theme = 'sphinx_rtd_theme'

html_static_path = ['_static']

htmlhelp_basename = 'Biposetsdoc'

latex_documents = [
    (master_doc, 'Biposets.tex', 'Biposets Documentation',
     author, 'manual'),
]

man_pages = [
    (master_doc, 'biposets', 'Biposets Documentation',
     [author], 1)
]

texinfo_documents = [
    (master_doc, 'Biposets', 'Biposets Documentation',
     author, 'Biposets', 'Construct, validate and explore finite binary posets.',
     'Miscellaneous'),
]
