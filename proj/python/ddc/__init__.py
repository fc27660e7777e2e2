"""Density-based clustering of 2-D embeddings: local density-peak clusters
merged through core-point connectivity, plus DBSCAN/DenPeak/k-means
baselines, ACC/NMI scoring and SVG figures."""

from ._ddc import (
    BaselineResult,
    CutoffParams,
    DegenerateInputError,
    DensityProfile,
    IoError,
    MergedClustering,
    ParseError,
    PointSet,
    __version__,
    accuracy,
    compute_profile,
    compute_rho,
    cutoff_from_ratio,
    dbscan,
    dbscan_auto_params,
    ddc_cluster,
    denpeak,
    denpeak_auto_dc,
    evaluate,
    generate_shapes,
    generate_twomoon,
    kmeans,
    load_points,
    mean_pairwise_distance,
    nmi,
    render_decision_graph,
    render_scatter,
    save_points,
    select_local_centers,
)

__all__ = [name for name in dir() if not name.startswith("_")]
