"""bchkit: q-ary BCH codes of lengths (q^m+1)/(q+1) and q^m+1.

Library layers:

- gf: exact GF(p^k) and polynomial arithmetic
- cosets: cyclotomic-coset oracles over Z_n
- formulas: closed-form leader catalogs, dimension formulas, dual cuts
- codes: code construction, duals, LCD checks, exact distances
- verify: the formula-vs-oracle sweep
- cli: the bchkit command line
"""

from . import cosets, errors, formulas, gf  # noqa: F401

__version__ = "0.1.0"
