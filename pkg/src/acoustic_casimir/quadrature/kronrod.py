"""The 7-point Gauss / 15-point Kronrod pair on [-1, 1].

Every panel is evaluated at the 15 Kronrod nodes (225 nodes per panel in two
dimensions); the 7 Gauss nodes are a subset, so the embedded estimate costs
no extra evaluations.
"""

from __future__ import annotations

import numpy as np

_XGK_HALF = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WGK_HALF = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
# Gauss weights for the Kronrod nodes with odd index in _XGK_HALF.
_WG_HALF = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)

NODES_PER_AXIS = 15

KRONROD_NODES = np.array([-x for x in _XGK_HALF[:-1]] + [x for x in reversed(_XGK_HALF)])
KRONROD_WEIGHTS = np.array(list(_WGK_HALF[:-1]) + list(reversed(_WGK_HALF)))

_gauss = np.zeros(NODES_PER_AXIS)
for _i, _w in zip((1, 3, 5, 7), _WG_HALF, strict=True):
    _gauss[_i] = _w
    _gauss[NODES_PER_AXIS - 1 - _i] = _w
GAUSS_WEIGHTS = _gauss
del _gauss, _i, _w
