# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.
#
# This file does only contain a selection of the most common options. For a
# full list see the documentation:
# http://www.sphinx-doc.org/en/master/config

# -- Path setup --------------------------------------------------------------

import os
import sys
sys.path.insert(0, os.path.abspath('../..'))

import sfqmtunnel


# -- Project information -----------------------------------------------------

project = 'sfqmtunnel'
copyright = '2026, sfqmtunnel developers'
author = 'sfqmtunnel developers'

# The short X.Y version
version = sfqmtunnel.__version__
# The full version, including alpha/beta/rc tags
release = sfqmtunnel.__version__


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.githubpages',
    'sphinx.ext.napoleon',
    'sphinx.ext.todo',
]

templates_path = []
source_suffix = ['.rst']
master_doc = 'index'
language = 'en'
exclude_patterns = []
pygments_style = 'sphinx'


# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_static_path = []
htmlhelp_basename = 'sfqmtunneldoc'


# -- Options for LaTeX output ------------------------------------------------

latex_elements = {}
latex_documents = [
    (master_doc, 'sfqmtunnel.tex', 'sfqmtunnel Documentation',
     'sfqmtunnel developers', 'manual'),
]


# -- Options for manual page output ------------------------------------------

man_pages = [
    (master_doc, 'sfqm-tunnel', 'sfqmtunnel Documentation',
     [author], 1)
]


# -- Options for Texinfo output ----------------------------------------------

texinfo_documents = [
    (master_doc, 'sfqmtunnel', 'sfqmtunnel Documentation',
     author, 'sfqmtunnel', 'Tunneling times through locally periodic barriers in space-fractional quantum mechanics.',
     'Miscellaneous'),
]


# -- Extension configuration -------------------------------------------------

todo_include_todos = True
autodoc_member_order = 'bysource'
