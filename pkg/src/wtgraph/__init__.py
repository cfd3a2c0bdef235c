"""Weakly threshold degree sequences and graphs.

Submodules:

- seqcore    degree sequences, Erdos-Gallai slack, corrected Ferrers diagrams
- graphcore  small simple graphs, canonical forms, induced subgraphs, splits
- majorize   dominance order on degree sequences
- decomp     canonical composition/decomposition of graphs and sequences
- buildkit   construction operations, recognition, realization, enumeration
- census     exact counting via linear recurrences and generating functions
- exhaustive three-recognizer scan of every labeled graph at a fixed order
- cli        the `wt` command-line front end
"""

__version__ = "0.1.0"
