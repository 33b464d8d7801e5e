"""twobytwo: the swap topology of 2x2 ordinal games.

Enumeration and canonical indexing of the 144 strict games, swap-graph
navigation, equilibrium-based payoff families, the ties extension with
its census and natural order, and normalization of real-valued games
into the ordinal atlas.
"""

__version__ = "1.0.0"

from .errors import (
    ConstructionInvariantViolation,
    InvalidRanking,
    IoFailure,
    NotStrict,
    ParseError,
    RankAbsent,
    RankNotTied,
    TwoByTwoError,
    Unreachable,
)
from .games import (
    Alignment,
    AnalysisReport,
    CanonicalForm,
    Cell,
    CELLS,
    Dominance,
    Maximin,
    OrdinalGame,
    PRISONERS_DILEMMA,
    Quadrant,
    analyze_game,
    canonical_game,
    canonicalize,
    dominant_strategies,
    make_game,
    pure_nash,
    transpose_players,
)
from .atlas import (
    PathStep,
    PlayerAxis,
    StrictGameId,
    SwapEdge,
    SwapKind,
    TileId,
    TopologyAtlas,
    apply_swap,
    build_atlas,
    hotspots_and_pipes,
)
from .families import (
    Family,
    FamilyCensus,
    PayoffFamily,
    Subfamily,
    classify_family,
    distinct_up_to_player_swap,
    family_census,
)
from .ties import (
    CLASS_ORDER,
    HalfSwapStep,
    NaturalOrderCoordinate,
    PreferenceClass,
    TieLattice,
    TiesCensus,
    break_tie,
    enumerate_ties_census,
    make_tie,
    natural_order_coordinate,
    preference_class,
)
from .normalize import (
    NormalizedGame,
    RealGame,
    SampleCensus,
    normalize_game,
    order_graph_points,
    rank_with_ties,
    sample_census,
)
from .identifiers import (
    encode_game_string,
    encode_tie_coordinate,
    parse_game_string,
    parse_identifier,
    parse_tie_coordinate,
)
from .exports import (
    FAMILY_COLORS,
    atlas_document,
    chart_positions,
    export_atlas_json,
    export_chart_svg,
    export_dot,
)
