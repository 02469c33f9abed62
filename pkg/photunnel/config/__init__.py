"""
Overview:
    Global configuration of the photunnel package. It holds the package metadata
    (name, version, author) read by ``setup.py``, the CLI version banner and the
    comment header of every CSV file the tool writes.
"""
