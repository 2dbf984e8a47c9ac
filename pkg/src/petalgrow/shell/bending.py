"""
Hinge bending of a thin shell.

Every interior edge contributes `k_b * (theta - theta0) ** 2 * w` where theta
is the signed dihedral angle and `w = 3 |e|^2 / (A1 + A2)` is the usual edge
length over one third of the mean height of the two incident faces.  Forces
are the exact negative gradient of that energy, including the derivative of
the weight.
"""
from __future__ import annotations

from typing import Dict

import numpy as np
from loguru import logger

from ..mesh import Mesh
from .models import ForceField, RestState

__all__ = 'bending_forces', 'bending_energy'


def _hinge_terms(mesh: Mesh, rest: RestState) -> Dict[str, np.ndarray]:
    _, hinges = mesh.hinge_array()
    pos = mesh.positions
    x3 = pos[hinges[:, 0]]
    x4 = pos[hinges[:, 1]]
    x1 = pos[hinges[:, 2]]
    x2 = pos[hinges[:, 3]]

    e = x4 - x3
    n1 = np.cross(x1 - x3, x1 - x4)
    n2 = np.cross(x2 - x4, x2 - x3)
    esq = np.einsum('ij,ij->i', e, e)
    n1sq = np.einsum('ij,ij->i', n1, n1)
    n2sq = np.einsum('ij,ij->i', n2, n2)
    ok = (esq > 0.0) & (n1sq > 0.0) & (n2sq > 0.0)

    return dict(
        hinges=hinges[ok],
        x1=x1[ok], x2=x2[ok], x3=x3[ok], x4=x4[ok],
        e=e[ok], n1=n1[ok], n2=n2[ok],
        esq=esq[ok], n1sq=n1sq[ok], n2sq=n2sq[ok],
        skipped=np.asarray(int(np.count_nonzero(~ok))),
    )


def _angles(t: Dict[str, np.ndarray]) -> np.ndarray:
    elen = np.sqrt(t['esq'])
    u1 = t['n1'] / np.sqrt(t['n1sq'])[:, None]
    u2 = t['n2'] / np.sqrt(t['n2sq'])[:, None]
    ue = t['e'] / elen[:, None]
    sin = np.einsum('ij,ij->i', np.cross(u2, u1), ue)
    cos = np.einsum('ij,ij->i', u1, u2)
    return np.arctan2(sin, cos)


def bending_energy(mesh: Mesh, rest: RestState) -> float:
    t = _hinge_terms(mesh, rest)
    theta = _angles(t) - rest.rest_angle
    area = 0.5 * (np.sqrt(t['n1sq']) + np.sqrt(t['n2sq']))
    weight = 3.0 * t['esq'] / area
    return float(rest.bending_stiffness * np.sum(theta ** 2 * weight))


def bending_forces(mesh: Mesh, rest: RestState) -> ForceField:
    handles = mesh.vertex_handles()
    t = _hinge_terms(mesh, rest)
    skipped = int(t['skipped'])
    if skipped:
        logger.warning(f'Skipped {skipped} degenerate hinges in bending assembly')
    if rest.bending_stiffness == 0.0 or len(t['hinges']) == 0:
        return ForceField(
            handles=handles, forces=np.zeros((len(handles), 3)), skipped=skipped
        )

    x1, x2, x3, x4 = t['x1'], t['x2'], t['x3'], t['x4']
    e, n1, n2 = t['e'], t['n1'], t['n2']
    esq, n1sq, n2sq = t['esq'], t['n1sq'], t['n2sq']
    elen = np.sqrt(esq)
    ue = e / elen[:, None]
    m1 = n1 / n1sq[:, None]
    m2 = n2 / n2sq[:, None]

    theta = _angles(t) - rest.rest_angle

    # angle gradient per stencil vertex
    g1 = elen[:, None] * m1
    g2 = elen[:, None] * m2
    g3 = (
        np.einsum('ij,ij->i', x1 - x4, ue)[:, None] * m1
        + np.einsum('ij,ij->i', x2 - x4, ue)[:, None] * m2
    )
    g4 = -(
        np.einsum('ij,ij->i', x1 - x3, ue)[:, None] * m1
        + np.einsum('ij,ij->i', x2 - x3, ue)[:, None] * m2
    )

    # area gradients of face (x3, x4, x1) and face (x4, x3, x2)
    a1 = 0.5 * np.sqrt(n1sq)
    a2 = 0.5 * np.sqrt(n2sq)
    u1 = n1 / (2.0 * a1)[:, None]
    u2 = n2 / (2.0 * a2)[:, None]
    da1_3 = 0.5 * np.cross(u1, x1 - x4)
    da1_4 = 0.5 * np.cross(u1, x3 - x1)
    da1_1 = 0.5 * np.cross(u1, x4 - x3)
    da2_4 = 0.5 * np.cross(u2, x2 - x3)
    da2_3 = 0.5 * np.cross(u2, x4 - x2)
    da2_2 = 0.5 * np.cross(u2, x3 - x4)

    area = a1 + a2
    weight = 3.0 * esq / area
    dw_area = (-3.0 * esq / area ** 2)[:, None]
    dw1 = dw_area * da1_1
    dw2 = dw_area * da2_2
    dw3 = dw_area * (da1_3 + da2_3) + (3.0 / area)[:, None] * (-2.0 * e)
    dw4 = dw_area * (da1_4 + da2_4) + (3.0 / area)[:, None] * (2.0 * e)

    k = rest.bending_stiffness
    c_theta = (2.0 * k * theta * weight)[:, None]
    c_weight = (k * theta ** 2)[:, None]

    acc = np.zeros((mesh.num_vertex_slots, 3))
    hinges = t['hinges']
    for column, grad_theta, grad_weight in (
        (2, g1, dw1),
        (3, g2, dw2),
        (0, g3, dw3),
        (1, g4, dw4),
    ):
        np.add.at(acc, hinges[:, column], -(c_theta * grad_theta + c_weight * grad_weight))

    return ForceField.from_slots(handles, acc, skipped)
