# -*- coding: utf-8 -*-
#
# semiwave documentation build configuration file
#
import os
import re
import sys

sys.path.insert(0, os.path.abspath('..'))

import semiwave

# -- General configuration ------------------------------------------------

nitpicky = False

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
    'sphinx.ext.intersphinx',
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'sympy': ('https://docs.sympy.org/latest/', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
}

templates_path = []
source_suffix = '.rst'
master_doc = 'index'

project = u'semiwave'
copyright = u'2024-2026, semiwave authors'
author = 'semiwave authors'

version = semiwave.__version__
release = version

exclude_patterns = ['_build']
pygments_style = 'sphinx'

# -- Extensions configuration ---------------------------------------------

autoclass_content = 'both'
autodoc_member_order = 'bysource'

napoleon_google_docstring = True
napoleon_numpy_docstring = False
napoleon_include_special_with_doc = True
napoleon_use_ivar = True
napoleon_use_param = True
napoleon_use_rtype = True

# docstrings write inline math as $...$
_inline_math = re.compile(r"(?<![\w\\])\$([^$\n]+?)\$(?!\w)")


def _rewrite_inline_math(app, what, name, obj, options, lines):
    lines[:] = [_inline_math.sub(r":math:`\1`", line) for line in lines]


def setup(app):
    app.connect('autodoc-process-docstring', _rewrite_inline_math)


# -- Options for HTML output ----------------------------------------------

on_rtd = os.environ.get('READTHEDOCS', None) == 'True'
if not on_rtd:  # only import and set the theme if we're building docs locally
    import sphinx_rtd_theme
    html_theme = "sphinx_rtd_theme"
    html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]

html_theme_options = {
    'collapse_navigation': True,
    'display_version': True,
    'navigation_depth': 4,
}
html_show_sourcelink = False
htmlhelp_basename = 'semiwavedoc'
