#!/usr/bin/env python3
"""Ground ambulation: stick-slip drift, steering, and the speed map.

The wings never touch the ground; their drag shakes the body hard enough
to beat Coulomb friction for part of each stroke. Faster flapping both
raises the drive force and unloads the legs (more lift), so speed climbs
with amplitude and frequency until the robot simply takes off near the
140 Hz resonance.
"""

import pathlib
from dataclasses import replace

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from flapsim.scenario import ground_speed_sweep, load_scenario, run_scenario

OUT = pathlib.Path(__file__).parent / "output"
SCENARIOS = pathlib.Path(__file__).parent.parent / "scenarios"
OUT.mkdir(exist_ok=True)


def track(out_dir):
    rows = (out_dir / "trajectory.csv").read_text().splitlines()
    cols = rows[0].split(",")
    data = np.array([[float(v) for v in r.split(",")[:11]] for r in rows[1:]])
    return data[:, cols.index("x")], data[:, cols.index("y")]


def main():
    line = run_scenario(load_scenario(SCENARIOS / "ground_line.yaml"),
                        out_dir=OUT / "ground_line")
    steer = run_scenario(load_scenario(SCENARIOS / "ground_steer.yaml"),
                         out_dir=OUT / "ground_steer")
    print(f"straight line: {line.final_position[0] * 100:.2f} cm forward in "
          f"{line.duration:.0f} s ({line.mean_speed * 100:.2f} cm/s)")
    print(f"steering (left wing harder): ended at "
          f"({steer.final_position[0] * 100:.1f}, {steer.final_position[1] * 100:.1f}) cm")

    amplitudes = [200.0, 225.0, 250.0]
    frequencies = [40.0, 60.0, 80.0, 100.0, 120.0]
    cells = ground_speed_sweep(amplitudes, frequencies)
    grid = np.array([[next(c.mean_speed for c in cells
                           if c.amplitude == a and c.frequency_hz == f)
                      for f in frequencies] for a in amplitudes])

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(11, 4))
    for name, out in (("straight", OUT / "ground_line"), ("steer", OUT / "ground_steer")):
        x, y = track(out)
        ax1.plot(x * 100, y * 100, label=name)
    ax1.set_xlabel("x [cm]"); ax1.set_ylabel("y [cm]")
    ax1.axis("equal"); ax1.legend(); ax1.set_title("tracks (top view)")

    for i, a in enumerate(amplitudes):
        ax2.plot(frequencies, grid[i] * 100, marker="o", label=f"{a:.0f} V")
    ax2.set_xlabel("flap frequency [Hz]")
    ax2.set_ylabel("speed [cm/s]")
    ax2.set_title("speed map (lift-off near 140 Hz)")
    ax2.legend()
    fig.tight_layout()
    fig.savefig(OUT / "ground_locomotion.png", dpi=130)
    print("saved", OUT / "ground_locomotion.png")


if __name__ == "__main__":
    main()
