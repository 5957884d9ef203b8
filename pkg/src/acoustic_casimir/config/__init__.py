from .models import (
    CavitySection,
    DosSection,
    RunConfig,
    RunSection,
    SphereSection,
    SweepSection,
    build_run_config,
    parse_reflectivity_spec,
    render_config,
)
from .parse import (
    SECTIONS,
    Entry,
    ParsedConfig,
    apply_overrides,
    load_config_file,
    parse_config_text,
)

__all__ = [
    "SECTIONS",
    "CavitySection",
    "DosSection",
    "Entry",
    "ParsedConfig",
    "RunConfig",
    "RunSection",
    "SphereSection",
    "SweepSection",
    "apply_overrides",
    "build_run_config",
    "load_config_file",
    "parse_config_text",
    "parse_reflectivity_spec",
    "render_config",
]
