"""Exact verification and classification of braidings on pointed and Tambara-Yamagami categories.

Submodules: ``cyclotomic`` (exact arithmetic), ``abgroup`` (finite abelian
groups), ``cohomology`` (normalized cochains), ``quadforms`` (quadratic forms
and Gauss sums), ``skeletal`` (skeletal categories, functors, crossed data),
``pointed`` and ``tycat`` (the two families), ``search`` (exhaustive
root-of-unity solver) and ``cli``.
"""

__version__ = "0.1.0"
