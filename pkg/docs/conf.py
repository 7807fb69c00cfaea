# TwoQubit documentation build configuration file, created by
# sphinx-quickstart.
#
# This file is execfile()d with the current directory set to its containing dir.

# Standard Library
import os
import sys

sys.path.insert(0, os.path.abspath("_ext"))

# -- General configuration -----------------------------------------------------

extensions = ["sphinx.ext.intersphinx", "sphinx.ext.mathjax", "djangodocs"]
intersphinx_mapping = {
    "django": (
        "https://docs.djangoproject.com/en/4.2/",
        "https://docs.djangoproject.com/en/4.2/_objects/",
    ),
    "python": ("https://docs.python.org/3.11", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "scipy": ("https://docs.scipy.org/doc/scipy/", None),
}

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"

# General information about the project.
project = "TwoQubit"
copyright = """2024, TwoQubit contributors"""

# The short X.Y version.
version = "0.1"
# The full version, including alpha/beta/rc tags.
release = "0.1.0"

exclude_patterns = ["_build"]
pygments_style = "sphinx"

# -- Options for HTML output ---------------------------------------------------

html_theme = "default"
html_static_path = ["_static"]
htmlhelp_basename = "twoqubitdoc"

# -- Options for LaTeX output --------------------------------------------------

latex_documents = [
    (
        "index",
        "twoqubit.tex",
        "TwoQubit Documentation",
        """TwoQubit contributors""",
        "manual",
    )
]

# -- Options for manual page output --------------------------------------------

man_pages = [("index", "twoqubit", "TwoQubit Documentation", ["""TwoQubit contributors"""], 1)]
