"""Dynamic ego-network analysis: event sequences, distances, spatial layouts.

The pipeline turns a timestamped undirected network into one dynamic
ego-network per node, summarizes each as numeric time series, discretizes
the series into analyst-defined events, measures pairwise distances between
the resulting event sequences, and projects the collection into 2D so that
proximity encodes similarity of evolution patterns.
"""

__version__ = "0.1.0"

from .distance import (
    METRIC_EDIT,
    METRIC_EUCLIDEAN,
    DistanceMatrix,
    FeatureVector,
    distance_matrix,
    edit_distance,
    euclidean_distance,
    feature_vector,
)
from .errors import (
    ConsistencyError,
    DimensionError,
    DocumentError,
    MatrixError,
    ParameterError,
    ProfileError,
    SegueError,
    SpecificationError,
    TimeRangeError,
    UnknownIdError,
)
from .events import (
    Event,
    EventSequence,
    EventType,
    RangeSpec,
    attribute_shortcut,
    build_event_sequence,
    event_type_from_document,
    event_type_to_document,
    extract_interval_events,
    extract_point_events,
    fit_slope,
    preview_events,
)
from .layout import (
    DensityOverlay,
    Layout,
    Provenance,
    attribute_grouped_layout,
    classical_mds,
    coincidence_density,
    jitter,
    radial_layout,
)
from .network import (
    DynamicEgoNetwork,
    DynamicNetwork,
    EdgeRecord,
    EgoSnapshot,
    GeneratorProfile,
    NodeRecord,
    build_all_ego_networks,
    build_dynamic_ego_network,
    canonicalize,
    dumps_network,
    ego_snapshot,
    generate_synthetic,
    load_network,
    loads_network,
    network_document,
    parse_dynamic_network,
    planted_archetypes,
    profile_from_document,
)
from .series import (
    DENSITY,
    SIZE,
    SeriesStats,
    TimeSeries,
    TimeSeriesType,
    attribute_count,
    available_series_types,
    derive_series,
    series_stats,
    series_type_from_string,
    series_type_to_string,
)
from .session import PixelDisplayData, Session, create_session, read_layout_csv
