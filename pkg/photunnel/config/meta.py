"""
Package metadata and version information module.

This module defines the core metadata constants for the photunnel package,
including version information, authorship details, and package description.
They are read by ``setup.py`` when building a distribution, by the ``--version``
option of the command line interface, and by the CSV writer which stamps the
version into the comment header of every output file.

The module contains the following metadata constants:

* :const:`__TITLE__` - Package name identifier
* :const:`__VERSION__` - Current package version following semantic versioning
* :const:`__DESCRIPTION__` - Brief package description for PyPI and documentation
* :const:`__AUTHOR__` - Package author name
* :const:`__AUTHOR_EMAIL__` - Contact email for package maintainer

.. note::
   Tables written by older versions can be told apart by the version line
   of the CSV header, so bump :const:`__VERSION__` whenever numerical output changes.

Example::

    >>> from photunnel.config.meta import __VERSION__, __TITLE__
    >>> print(f"{__TITLE__} version {__VERSION__}")
    photunnel version 0.1.0

"""

#: str: Title of this project (should be `photunnel`).
#:
#: This constant defines the official package name used for PyPI distribution,
#: import statements and the console script name.
__TITLE__ = "photunnel"

#: str: Version of this project.
#:
#: Version string following semantic versioning format (MAJOR.MINOR.PATCH).
#: It is written into the header of every CSV produced by the CLI.
__VERSION__ = "0.1.0"

#: str: Short description of the project, will be included in ``setup.py``.
__DESCRIPTION__ = ('Desk-scale simulator of single-photon tunneling times: multilayer barrier optics, '
                   'Wigner/Buttiker-Landauer/Larmor times, Hong-Ou-Mandel dip metrology, '
                   'FTIR beam shifts and a time-domain causality check.')

#: str: Author of this project.
__AUTHOR__ = "HansBug"

#: str: Email of the author.
__AUTHOR_EMAIL__ = "hansbug@buaa.edu.cn"
