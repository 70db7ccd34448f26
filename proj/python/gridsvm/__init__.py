"""Hurricane outage prediction: SMO kernel SVM, synthetic data, and evaluation."""

from gridsvm._core import (
    FeatureVector,
    GenConfig,
    HazardParams,
    KernelSpec,
    LabeledSample,
    LogRegModel,
    SvmModel,
    category_probability,
    cross_validate_svm,
    dataset_to_csv,
    generate_dataset,
    interarrival_pdf,
    kernel_eval,
    kfold_split,
    load_model_json,
    metrics,
    polynomial_expand,
    read_csv,
    resilience_index,
    train_logreg,
    train_svm,
    write_csv,
)

__all__ = [
    "FeatureVector",
    "GenConfig",
    "HazardParams",
    "KernelSpec",
    "LabeledSample",
    "LogRegModel",
    "SvmModel",
    "category_probability",
    "cross_validate_svm",
    "dataset_to_csv",
    "generate_dataset",
    "interarrival_pdf",
    "kernel_eval",
    "kfold_split",
    "load_model_json",
    "metrics",
    "polynomial_expand",
    "read_csv",
    "resilience_index",
    "train_logreg",
    "train_svm",
    "write_csv",
]
