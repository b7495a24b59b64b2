"""surflink: link diagrams on glued surfaces with orbifold rigidity certificates.

Modules: gluing (polygon identification surfaces and homology), diagram
(4-valent combinatorial maps), spanning (state-style spanning surfaces and
flag complexes), symmetry (certificates), orbifold (quotients, reduction,
rigidity), criteria (hyperbolicity preconditions), families (generators),
pipeline (end-to-end certification), pd / fileio / svg / report / cli
(formats and tooling).
"""

__version__ = "0.1.0"
