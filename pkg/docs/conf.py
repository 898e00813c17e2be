# Configuration file for the Sphinx documentation builder.
#
# For the full list of built-in configuration values, see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import sys
from pathlib import Path
here = Path(__file__)
root = here.parent.parent
model_conf = root / 'verspec_q7_conf'
sys.path.append(str(root))
sys.path.append(str(model_conf))

# -- Project information -----------------------------------------------------

project = 'verspec'
release = '0.1.0'  # see also from verspec import __version__

# -- General configuration ---------------------------------------------------

extensions = ['myst_parser',
    'sphinx.ext.napoleon',  # Google format doctrings -> reSt before parsed
    'sphinx.ext.doctest',
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
	'sphinx.ext.viewcode',
]

templates_path = ['_templates']
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']
html_title = "verspec Documentation"
html_theme_options = {
	'display_version': True,
	'prev_next_buttons_location': 'bottom',
	'collapse_navigation': False,
	'navigation_depth': 3,
	'includehidden': True,
	'titles_only': False
}
