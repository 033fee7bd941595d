"""Charts, subcharts, the full/saturated/split deciders and embedding data."""

from .charts import (
    Chart,
    Graph2D,
    IsotropyData,
    LinearSubspace,
    Ray,
    Shape,
    Subchart,
    isotropy_data,
    setwise_stabilizer,
    span_shape,
)
from .deciders import (
    EmbeddingData,
    SaturationResult,
    SaturationWitness,
    SplitResult,
    Verdict,
    build_embedding,
    embeddability,
    is_full,
    is_saturated,
    is_split,
    split_by_sections,
)
from .homs import enumerate_equivariant_homs
from .oracle import sampling_oracle
from .recognition import recognize_suborbifold

__all__ = [
    "Chart", "EmbeddingData", "Graph2D", "IsotropyData", "LinearSubspace", "Ray",
    "SaturationResult", "SaturationWitness", "Shape", "SplitResult", "Subchart", "Verdict",
    "build_embedding", "embeddability", "enumerate_equivariant_homs", "is_full",
    "is_saturated", "is_split", "isotropy_data", "recognize_suborbifold", "sampling_oracle",
    "setwise_stabilizer", "span_shape", "split_by_sections",
]
