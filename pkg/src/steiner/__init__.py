"""Steiner triple system toolkit.

Core data model and codecs live in `core`; per-topic analyses in
`configurations`, `resolvability`, `colouring`, `trades`, `structure`
and `isomorphism`; reference systems in `fixtures`; the command line
front end in `cli`.
"""

from .core import (CyclicSpec, TripleSystem, decode_compact, direct_product,
                   encode_compact, from_triples, generate_cyclic)

__all__ = [
    "CyclicSpec",
    "TripleSystem",
    "decode_compact",
    "direct_product",
    "encode_compact",
    "from_triples",
    "generate_cyclic",
]

__version__ = "0.1.0"
