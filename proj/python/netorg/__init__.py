"""Network organization simulation toolkit.

C++ core exposed through pybind11: generators for random, preferential-
attachment and recursive-cluster networks, structural metrics, failure and
attack experiments, and the two agent coordination dynamics (color
alignment, need/food/garbage product flows).
"""

from netorg._core import (  # noqa: F401
    DEFAULT_FRICTION_STEPS,
    AgentVectors,
    FrictionRecord,
    Graph,
    GraphError,
    HierarchicalNetwork,
    OlsFit,
    ProductSpace,
    RemovalMode,
    Rng,
    RobustnessSeries,
    RobustnessStep,
    SynergyMode,
    SynergyParams,
    SynergyRecord,
    SynergyState,
    __version__,
    clustering_by_degree,
    clustering_scaling_fit,
    colordifference,
    compute_food,
    compute_garbage,
    degree_histogram,
    friction_fitness,
    generate_ba,
    generate_hierarchical,
    generate_random,
    init_colors,
    init_synergy,
    load_config_json,
    load_edge_list,
    loglog_slope,
    mean_std,
    median,
    mutate_select,
    ols_fit,
    paper_suite,
    run_attack,
    run_experiment,
    run_failure,
    run_friction,
    run_synergy,
    run_synergy_from,
    sample_by_degree,
    save_edge_list,
    step_colors,
    synergy_fitness,
    t_quantile_975,
)
