"""chromalg - exact computations in the chromatic algebra and its relatives"""

from .chromatic import ChromaticElement, PlanarPartition
from .graph import EmbeddedGraph
from .laurent import LaurentPolynomial, ParameterFrame
from .skein import LinkDiagram, TangleWord
from .temperley_lieb import TLDiagram, TLElement
