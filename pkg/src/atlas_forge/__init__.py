"""atlas-forge: turn a technology name or an AI-incident corpus into a
validated, laid-out, servable atlas of AI uses with risks, benefits, and
mitigations."""

from .model import (
    CATEGORY_NAMES,
    AssessmentItem,
    AtlasDataset,
    CategorySet,
    ImpactCard,
    ImplementationPotential,
    Mitigation,
    RiskLevel,
    SocioTechnicalLayer,
    UseCase,
    ValidationReport,
    make_use,
    use_id,
    validate_dataset,
    validate_use,
)
from .serialization import (
    AtlasFormatError,
    parse_atlas,
    read_atlas,
    serialize_atlas,
    write_atlas,
)

__version__ = "0.1.0"

__all__ = [
    "CATEGORY_NAMES",
    "AssessmentItem",
    "AtlasDataset",
    "CategorySet",
    "ImpactCard",
    "ImplementationPotential",
    "Mitigation",
    "RiskLevel",
    "SocioTechnicalLayer",
    "UseCase",
    "ValidationReport",
    "make_use",
    "use_id",
    "validate_dataset",
    "validate_use",
    "AtlasFormatError",
    "parse_atlas",
    "read_atlas",
    "serialize_atlas",
    "write_atlas",
    "__version__",
]
