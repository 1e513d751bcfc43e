"""Tree-based genetic programming for symbolic regression, with a pluggable
bloat-control layer and a benchmark harness for comparing methods."""

from .bloatcontrol import TarpeianConfig, tarpeian_mark
from .engine import (
    EngineConfig,
    GenerationResult,
    breed_child,
    derive_seed,
    init_population,
    run_evolution,
    run_generation,
)
from .exprtree import (
    CLAMP,
    Const,
    ExprTree,
    Func,
    GrowMethod,
    PRIMITIVES,
    Primitive,
    Var,
    apply_primitive,
    eval_cases,
    eval_tree,
    parse_sexpr,
    pick_node,
    random_tree,
    replace_subtree,
    subtree_at,
    to_sexpr,
    tree_depth,
    tree_size,
    trees_equal,
)
from .fitness import (
    ERROR_CAP,
    Individual,
    Population,
    adjusted_fitness,
    evaluate_population,
    raw_error,
    worst_raw_error,
)
from .harness import (
    ConfigError,
    ExperimentConfig,
    PRESETS,
    apply_preset,
    derive_run_seed,
    emit_report,
    expand_cells,
    get_preset,
    parse_config,
    regenerate_report,
    run_experiment,
)
from .metrics import (
    RunRecord,
    SweepSummary,
    generation_curves,
    mann_whitney_u,
    summarize,
)
from .problems import (
    CaseSet,
    FitnessCase,
    PROBLEMS,
    PROBLEM_ORDER,
    Problem,
    get_problem,
    load_cases_csv,
    sample_cases,
    save_cases_csv,
    target_value,
)
from .selection import (
    Comparator,
    DirectBucket,
    DoubleTournament,
    Lexicographic,
    PlainTournament,
    RatioBucket,
    StrategySpec,
    assign_direct_buckets,
    assign_ratio_buckets,
    bucket_tournament_select,
    double_tournament_select,
    format_strategy,
    lexicographic_select,
    make_selector,
    parse_strategy,
    probabilistic_tournament_size,
    tournament_select,
)

__version__ = "1.0.0"
