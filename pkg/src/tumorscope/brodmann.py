"""Bundled Brodmann-area nomenclature, areas 1 through 47.

Names follow the conventional functional labels for Brodmann's
cytoarchitectonic map. Areas with no standard distinct human label
(14 to 16) fall back to "Brodmann area <id>".
"""

from .errors import BadAreaId

AREA_MIN = 1
AREA_MAX = 47

BRODMANN_NAMES = {
    1: "Primary somatosensory cortex (area 1)",
    2: "Primary somatosensory cortex (area 2)",
    3: "Primary somatosensory cortex (area 3)",
    4: "Primary motor cortex",
    5: "Somatosensory association cortex",
    6: "Premotor and supplementary motor cortex",
    7: "Somatosensory association cortex (superior parietal lobule)",
    8: "Frontal eye fields",
    9: "Dorsolateral prefrontal cortex",
    10: "Frontopolar cortex",
    11: "Orbitofrontal cortex",
    12: "Orbitofrontal cortex (medial)",
    13: "Insular cortex",
    17: "Primary visual cortex (V1)",
    18: "Secondary visual cortex (V2)",
    19: "Associative visual cortex (V3, V4, V5)",
    20: "Inferior temporal gyrus",
    21: "Middle temporal gyrus",
    22: "Superior temporal gyrus",
    23: "Ventral posterior cingulate cortex",
    24: "Ventral anterior cingulate cortex",
    25: "Subgenual cortex",
    26: "Ectosplenial area",
    27: "Piriform cortex",
    28: "Ventral entorhinal cortex",
    29: "Retrosplenial cingulate cortex",
    30: "Agranular retrosplenial cortex",
    31: "Dorsal posterior cingulate cortex",
    32: "Dorsal anterior cingulate cortex",
    33: "Pregenual anterior cingulate cortex",
    34: "Dorsal entorhinal cortex",
    35: "Perirhinal cortex",
    36: "Parahippocampal cortex",
    37: "Fusiform gyrus",
    38: "Temporopolar cortex",
    39: "Angular gyrus",
    40: "Supramarginal gyrus",
    41: "Primary auditory cortex (A1)",
    42: "Secondary auditory cortex",
    43: "Primary gustatory cortex",
    44: "Pars opercularis (Broca's area)",
    45: "Pars triangularis (Broca's area)",
    46: "Dorsolateral prefrontal cortex (area 46)",
    47: "Pars orbitalis (inferior frontal gyrus)",
}


def anatomical_name(area_id: int) -> str:
    """Human-readable name of a Brodmann area, total over 1..47.

    Raises
    ------
    BadAreaId
        If ``area_id`` is outside [1, 47].
    """
    if not AREA_MIN <= area_id <= AREA_MAX:
        raise BadAreaId(f"Brodmann area {area_id} outside [{AREA_MIN}, {AREA_MAX}]")
    return BRODMANN_NAMES.get(area_id, f"Brodmann area {area_id}")
