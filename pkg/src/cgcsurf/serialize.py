"""Mesh and diagnostics file writers (OBJ, PLY, CSV sidecar)."""

import numpy as np

from .minkowski import mink_from_herm, to_poincare_ball


def ball_vertices(s):
    """Poincare-ball coordinates of the immersion, shape (nx, ny, 3)."""
    return to_poincare_ball(mink_from_herm(s.f))


def _faces(nx, ny):
    faces = []
    for i in range(nx - 1):
        for j in range(ny - 1):
            # 1-based OBJ indices, row-major vertex order, consistent winding
            v00 = i * ny + j + 1
            v10 = (i + 1) * ny + j + 1
            v11 = (i + 1) * ny + j + 2
            v01 = i * ny + j + 2
            faces.append((v00, v10, v11))
            faces.append((v00, v11, v01))
    return faces


def surface_obj(s):
    verts = ball_vertices(s)
    nx, ny = verts.shape[:2]
    lines = []
    for i in range(nx):
        for j in range(ny):
            x, y, z = verts[i, j]
            lines.append(f"v {x:.17g} {y:.17g} {z:.17g}")
    for a, b, c in _faces(nx, ny):
        lines.append(f"f {a} {b} {c}")
    return "\n".join(lines) + "\n"


def surface_ply(s):
    verts = ball_vertices(s)
    nx, ny = verts.shape[:2]
    faces = _faces(nx, ny)
    lines = [
        "ply",
        "format ascii 1.0",
        f"element vertex {nx * ny}",
        "property float x",
        "property float y",
        "property float z",
        f"element face {len(faces)}",
        "property list uchar int vertex_indices",
        "end_header",
    ]
    for i in range(nx):
        for j in range(ny):
            x, y, z = verts[i, j]
            lines.append(f"{x:.17g} {y:.17g} {z:.17g}")
    for a, b, c in faces:
        lines.append(f"3 {a - 1} {b - 1} {c - 1}")
    return "\n".join(lines) + "\n"


def diagnostics_csv(k_num, h_num, q_num):
    """Per-vertex sidecar: i,j,K_num,H_num,reQ,imQ (NaN on the boundary ring)."""
    nx, ny = k_num.shape
    lines = ["i,j,K_num,H_num,reQ,imQ"]
    for i in range(nx):
        for j in range(ny):
            lines.append(
                f"{i},{j},{k_num[i, j]:.17g},{h_num[i, j]:.17g},"
                f"{q_num[i, j].real:.17g},{q_num[i, j].imag:.17g}"
            )
    return "\n".join(lines) + "\n"
