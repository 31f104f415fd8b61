#!/usr/bin/env python3
# Copyright 2026 The exdeploy Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http:#www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Regenerates the bundled scenario files under scenarios/.

Two 100 x 100 obstacle workspaces for six agents, two small mazes and two
hilly terrains. Coordinates are drawn from fixed seeds so the output is
reproducible.
"""

import json
import math
import pathlib

import numpy as np

OUT = pathlib.Path(__file__).resolve().parent.parent / "scenarios"


def point_in_poly(p, poly):
    x, y = p
    inside = False
    n = len(poly)
    for i in range(n):
        (ax, ay), (bx, by) = poly[i], poly[(i + 1) % n]
        if (ay > y) != (by > y):
            xi = ax + (y - ay) * (bx - ax) / (by - ay)
            if x < xi:
                inside = not inside
    return inside


def dist_to_poly(p, poly):
    best = math.inf
    n = len(poly)
    for i in range(n):
        a, b = np.array(poly[i], float), np.array(poly[(i + 1) % n], float)
        ab = b - a
        t = np.clip(np.dot(np.array(p) - a, ab) / np.dot(ab, ab), 0, 1)
        best = min(best, float(np.linalg.norm(np.array(p) - (a + t * ab))))
    return best


def free(p, obstacles, margin=0.5):
    return all(not point_in_poly(p, o) and dist_to_poly(p, o) > margin for o in obstacles)


def r2(v):
    return [round(float(v[0]), 2), round(float(v[1]), 2)]


def write(name, doc):
    (OUT / name).write_text(json.dumps(doc, indent=1) + "\n")


CLUTTER_OBSTACLES = [
    [[20, 30], [25, 30], [25, 75], [20, 75]],
    [[45, 15], [75, 15], [75, 22], [52, 22], [52, 45], [45, 45]],
    [[60, 60], [85, 55], [72, 82]],
    [[30, 82], [42, 80], [45, 90], [36, 96], [28, 90]],
    [[55, 35], [95, 35], [95, 40], [55, 40]],
    [[8, 8], [16, 8], [16, 16], [8, 16]],
    [[85, 68], [92, 77], [85, 86], [79, 77]],
]


def grid_candidates(obstacles, lo=5, hi=95, step=10):
    pts = []
    for y in range(lo, hi + 1, step):
        for x in range(lo, hi + 1, step):
            if free((x, y), obstacles, margin=0.75):
                pts.append([x, y])
    return pts


def clutter():
    rng = np.random.default_rng(3)
    targets = []
    while len(targets) < 60:
        p = rng.uniform(1, 99, 2)
        if free(p, CLUTTER_OBSTACLES):
            targets.append(r2(p))
    doc = {
        "name": "clutter-fair-access",
        "bounds": [0, 0, 100, 100],
        "obstacles": CLUTTER_OBSTACLES,
        "targets": targets,
        "candidates": grid_candidates(CLUTTER_OBSTACLES),
        "K": 6,
        "task": "fair-access",
    }
    write("scenario_fig3.json", doc)


def clutter_hotspot():
    rng = np.random.default_rng(4)
    centers = [(12, 85, 4.0, 16), (37, 55, 4.0, 14), (88, 15, 3.5, 14),
               (65, 90, 4.0, 12), (35, 10, 3.0, 10), (88, 55, 3.0, 8)]
    targets = []
    for cx, cy, s, n in centers:
        k = 0
        while k < n:
            p = rng.normal((cx, cy), s)
            if 1 <= p[0] <= 99 and 1 <= p[1] <= 99 and free(p, CLUTTER_OBSTACLES):
                targets.append(r2(p))
                k += 1
    while len(targets) < 86:
        p = rng.uniform(1, 99, 2)
        if free(p, CLUTTER_OBSTACLES):
            targets.append(r2(p))
    doc = {
        "name": "clutter-hotspot",
        "bounds": [0, 0, 100, 100],
        "obstacles": CLUTTER_OBSTACLES,
        "targets": targets,
        "candidates": grid_candidates(CLUTTER_OBSTACLES),
        "K": 6,
        "task": "hotspot",
        "hotspot": {"ell": 20.0, "L": math.log1p(100 * math.sqrt(2))},
    }
    write("scenario_fig4.json", doc)


def maze():
    obstacles = [
        [[8, 3], [9, 3], [9, 30], [8, 30]],
        [[17, 10], [18, 10], [18, 37], [17, 37]],
        [[26, 3], [27, 3], [27, 30], [26, 30]],
        [[31, 32], [38, 32], [38, 35], [31, 35]],
        [[30, 10], [36, 14], [33, 20]],
    ]
    rng = np.random.default_rng(11)
    targets = []
    while len(targets) < 20:
        p = rng.uniform(0.5, 39.5, 2)
        if free(p, obstacles):
            targets.append(r2(p))
    candidates = [p for p in ([x, y] for y in range(4, 40, 8) for x in range(4, 40, 8))
                  if free(p, obstacles)]
    write("workspace_maze.json", {
        "name": "maze", "bounds": [0, 0, 40, 40], "obstacles": obstacles,
        "targets": targets, "candidates": candidates, "K": 3,
    })


def rooms():
    obstacles = [
        [[14, 2], [15, 2], [15, 8], [14, 8]],
        [[14, 10], [15, 10], [15, 18], [14, 18]],
        [[3, 5], [10, 5], [10, 15], [3, 15], [3, 13], [8, 13], [8, 7], [3, 7]],
        [[20, 4], [26, 4], [26, 6], [22, 6], [22, 14], [20, 14]],
    ]
    rng = np.random.default_rng(12)
    targets = []
    while len(targets) < 16:
        p = rng.uniform(0.5, [29.5, 19.5], 2)
        if free(p, obstacles):
            targets.append(r2(p))
    candidates = [p for p in ([x, y] for y in range(2, 20, 4) for x in range(2, 30, 4))
                  if free(p, obstacles)]
    write("workspace_rooms.json", {
        "name": "rooms", "bounds": [0, 0, 30, 20], "obstacles": obstacles,
        "targets": targets, "candidates": candidates, "K": 3,
    })


TERRAIN_PARAMS = {"w1": 0.4, "w2": 0.3, "w3": 0.3, "s_crit": 1.0, "f_crit": 0.5,
                  "zeta_crit": 2.0, "tau_max": 0.5, "window": 3}


def tau_map(h, cell, p):
    """Same feature definitions as the C++ terrain module."""
    rows, cols = h.shape
    pad = np.pad(h, 1, mode="edge")
    dx = np.empty_like(h)
    dy = np.empty_like(h)
    dx[:, 1:-1] = (h[:, 2:] - h[:, :-2]) / (2 * cell)
    dx[:, 0] = (h[:, 1] - h[:, 0]) / cell
    dx[:, -1] = (h[:, -1] - h[:, -2]) / cell
    dy[1:-1, :] = (h[2:, :] - h[:-2, :]) / (2 * cell)
    dy[0, :] = (h[1, :] - h[0, :]) / cell
    dy[-1, :] = (h[-1, :] - h[-2, :]) / cell
    slope = np.hypot(dx, dy)
    win = np.stack([pad[r:r + rows, c:c + cols] for r in range(3) for c in range(3)])
    flat = win.std(axis=0)
    step = win.max(axis=0) - win.min(axis=0)
    t = p["w1"] * slope / p["s_crit"] + p["w2"] * flat / p["f_crit"] + p["w3"] * step / p["zeta_crit"]
    return np.clip(t, 0, 1)


def easy(tau, p, limit=0.15):
    r, c = int(round(p[1])), int(round(p[0]))
    r0, c0 = max(r - 2, 0), max(c - 2, 0)
    return tau[r0:r + 3, c0:c + 3].max() <= limit


def write_terrain(stem, heights, name, candidates, targets, k, seed):
    np.savetxt(OUT / f"{stem}.csv", heights, fmt="%.4f", delimiter=",")
    write(f"scenario_{stem.split('_')[1]}.json", {
        "name": name,
        "terrain": {"origin": [0, 0], "cell_size": 1.0, "heights": f"{stem}.csv"},
        "targets": targets, "candidates": candidates, "K": k, "task": "fair-access",
        "terrain_params": TERRAIN_PARAMS,
        "rrt": {"samples": 1500, "step": 4.0, "radius_const": 140.0, "seed": seed},
    })


def ridge_basin():
    n = 101
    y, x = np.mgrid[0:n, 0:n].astype(float)
    r = np.hypot(x - 50, y - 50)
    h = 8.0 * np.exp(-((r - 15) ** 2) / (2 * 2.5 ** 2))          # closed ring ridge
    for cx, cy, hh, s in [(20, 80, 12, 5), (80, 22, 12, 5), (82, 80, 10, 4.5), (18, 20, 9, 4)]:
        h += hh * np.exp(-((x - cx) ** 2 + (y - cy) ** 2) / (2 * s ** 2))
    tau = tau_map(h, 1.0, TERRAIN_PARAMS)
    candidates = [[float(cx), float(cy)] for cy in range(10, 95, 10) for cx in range(10, 95, 10)
                  if easy(tau, (cx, cy)) and abs(math.hypot(cx - 50, cy - 50) - 15) > 6]
    rng = np.random.default_rng(51)
    targets = []
    while len(targets) < 22:
        p = rng.uniform(2, 98, 2)
        if easy(tau, p, 0.2) and math.hypot(p[0] - 50, p[1] - 50) > 24:
            targets.append(r2(p))
    write_terrain("terrain_fig5a", h, "ridge-basin",
                  candidates, targets, 4, 7)


def ridge_pass():
    n = 101
    y, x = np.mgrid[0:n, 0:n].astype(float)
    w = np.exp(-((y - 86) ** 2) / (2 * 6.0 ** 2))                # gentle saddle near y = 86
    height = 15 - 12.5 * w
    sigma = 4 + 7 * w
    h = height * np.exp(-((x - 52) ** 2) / (2 * sigma ** 2))
    h += 14 * np.exp(-((x - 20) ** 2 + (y - 2) ** 2) / (2 * 6 ** 2))
    tau = tau_map(h, 1.0, TERRAIN_PARAMS)
    candidates = [[float(cx), float(cy)] for cy in range(14, 95, 16) for cx in range(8, 40, 10)
                  if easy(tau, (cx, cy))]
    rng = np.random.default_rng(54)
    targets = []
    while len(targets) < 20:
        p = rng.uniform([66, 4], [97, 60], 2)
        if easy(tau, p, 0.2):
            targets.append(r2(p))
    write_terrain("terrain_fig5d", h, "ridge-pass",
                  candidates, targets, 3, 11)


def small():
    write("minimal.json", {
        "name": "minimal", "bounds": [0, 0, 10, 10],
        "targets": [[1, 1], [9, 9]], "candidates": [[2, 2], [5, 5], [8, 8]], "K": 1,
    })
    obstacles = [[[4, 4], [6, 4], [6, 6], [4, 6]]]
    rng = np.random.default_rng(8)
    targets = []
    while len(targets) < 10:
        p = rng.uniform(0.5, 9.5, 2)
        if free(p, obstacles):
            targets.append(r2(p))
    write("small_partition.json", {
        "name": "small-partition", "bounds": [0, 0, 10, 10], "obstacles": obstacles,
        "targets": targets,
        "candidates": [[1, 1], [3, 2], [8, 1], [9, 3], [1, 8], [3, 9], [8, 8], [9, 6]],
        "partition": [{"indices": [0, 1, 2, 3], "quota": 2}, {"indices": [4, 5, 6, 7], "quota": 1}],
        "K": 3, "task": "fair-access",
    })
    yy, xx = np.mgrid[0:21, 0:21].astype(float)
    hill = 6.0 * np.exp(-((xx - 10) ** 2 + (yy - 10) ** 2) / (2 * 2.0 ** 2))
    write("small_terrain.json", {
        "name": "small-terrain",
        "terrain": {"origin": [0, 0], "cell_size": 1.0,
                    "heights": [[round(float(v), 4) for v in row] for row in hill]},
        "targets": [[2, 2], [18, 18], [2, 18], [18, 2]],
        "candidates": [[4, 10], [16, 10], [10, 3], [10, 17]],
        "K": 2, "terrain_params": TERRAIN_PARAMS,
        "rrt": {"samples": 400, "step": 2.0, "radius_const": 30.0, "seed": 3},
    })


if __name__ == "__main__":
    OUT.mkdir(exist_ok=True)
    clutter()
    clutter_hotspot()
    maze()
    rooms()
    ridge_basin()
    ridge_pass()
    small()
