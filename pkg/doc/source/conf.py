master_doc = "index"
project = "schubert-cones"
extensions = ["sphinx.ext.autodoc"]
