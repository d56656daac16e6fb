#!/usr/bin/env python3
"""Closed-loop hover and a ramped landing.

The cascaded controller runs from emulated motion-capture samples at
240 Hz: altitude PID sets the common drive amplitude, a lateral PD picks a
thrust-vector inclination, the inner attitude PID turns the inclination
error into roll/pitch torques, and the mixer splits everything into
per-wing amplitudes plus a shared second-harmonic ratio. Landing is just
the altitude reference ramped to zero.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from flapsim.scenario import load_scenario, run_scenario

OUT = pathlib.Path(__file__).parent / "output"
SCENARIOS = pathlib.Path(__file__).parent.parent / "scenarios"
OUT.mkdir(exist_ok=True)


def columns(out_dir, *names):
    rows = (out_dir / "trajectory.csv").read_text().splitlines()
    header = rows[0].split(",")
    picked = []
    for name in names:
        idx = header.index(name)
        picked.append(np.array([float(r.split(",")[idx]) for r in rows[1:]]))
    return picked


def main():
    hover = run_scenario(load_scenario(SCENARIOS / "hover.yaml"),
                         out_dir=OUT / "hover")
    landing = run_scenario(load_scenario(SCENARIOS / "landing_closed_loop.yaml"),
                           out_dir=OUT / "landing")

    rms = hover.rms_error_final_second
    print(f"hover RMS over the final second: x={rms[0] * 1e3:.2f} mm, "
          f"y={rms[1] * 1e3:.2f} mm, z={rms[2] * 1e3:.2f} mm")
    ev = landing.landing_event
    print(f"landing: {ev['outcome']} touchdown at {abs(ev['vertical_speed_ms']):.3f} m/s, "
          f"t={ev['time_s']:.2f} s")

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(11, 4))
    t, z = columns(OUT / "hover", "t", "z")
    ax1.plot(t, z * 100, label="altitude")
    ax1.axhline(4.0, color="k", ls="--", lw=0.8, label="reference")
    ax1.set_xlabel("t [s]"); ax1.set_ylabel("z [cm]")
    ax1.set_title("hover at 4 cm"); ax1.legend()

    t, z, amp = columns(OUT / "landing", "t", "z", "amp_left")
    ax2.plot(t, z * 100, label="altitude")
    ax2.plot(t, amp / 100.0, lw=0.7, alpha=0.7, label="amplitude [V/100]")
    ax2.axvline(ev["time_s"], color="r", lw=0.8, label="touchdown")
    ax2.set_xlabel("t [s]"); ax2.set_ylabel("z [cm]")
    ax2.set_title("ramped landing"); ax2.legend()
    fig.tight_layout()
    fig.savefig(OUT / "hover_and_landing.png", dpi=130)
    print("saved", OUT / "hover_and_landing.png")


if __name__ == "__main__":
    main()
