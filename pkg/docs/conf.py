#!/usr/bin/env python
#
# dl_cospectral documentation build configuration file.

import os
import sys

sys.path.insert(0, os.path.abspath(".."))

import dl_cospectral  # noqa: E402

extensions = ["sphinx.ext.autodoc", "sphinx.ext.napoleon", "sphinx.ext.viewcode"]

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"

project = "dl_cospectral"
copyright = "2024, Open Healthcare Network"
author = "Open Healthcare Network"

version = dl_cospectral.__version__
release = dl_cospectral.__version__

language = "en"
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]
pygments_style = "sphinx"
todo_include_todos = False

html_theme = "alabaster"
html_static_path = ["_static"]
htmlhelp_basename = "dl_cospectraldoc"

latex_documents = [
    (master_doc, "dl_cospectral.tex", "dl_cospectral Documentation", author, "manual"),
]
man_pages = [(master_doc, "dl_cospectral", "dl_cospectral Documentation", [author], 1)]
