#!/usr/bin/env python3
"""Sizing flotation legs, then ambulating on the water surface.

Surface tension along the three horizontal legs supports the robot: the
maximum the interface can supply is 2*sigma*L. The worst-case balance asks
for only half a centimeter of leg, but the empirical strider scaling
demands ~8x more margin; the interface then holds the robot down with ~10x
its weight at take-off, which is why it stays surface-bound.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from flapsim.hydrostatics import (
    LegGeometry,
    WaterProperties,
    flotation_check,
    format_report,
    min_leg_length_worst_case,
    recommended_leg_length_hu_fit,
    self_consistent_leg_length,
)
from flapsim.scenario import load_scenario, run_scenario

OUT = pathlib.Path(__file__).parent / "output"
SCENARIOS = pathlib.Path(__file__).parent.parent / "scenarios"
OUT.mkdir(exist_ok=True)


def main():
    water = WaterProperties()
    legs = LegGeometry()
    report = flotation_check(legs, water, 95e-6)
    print("=== flotation report, 95 mg robot on the default legs ===")
    print(format_report(report))

    w80 = 80e-6 * 9.81
    print("\nworst-case length (80 mg):  %.2f mm" % (1e3 * min_leg_length_worst_case(w80, water)))
    print("strider-fit length (80 mg): %.2f cm" % (1e2 * recommended_leg_length_hu_fit(w80)))
    print("with leg mass folded in:    %.2f cm" % (1e2 * self_consistent_leg_length(80e-6)))

    masses = np.linspace(10e-6, 1.2e-3, 200)
    margins = [flotation_check(legs, water, float(m)).flotation_margin for m in masses]

    line = run_scenario(load_scenario(SCENARIOS / "water_line.yaml"),
                        out_dir=OUT / "water_line")
    turn = run_scenario(load_scenario(SCENARIOS / "water_turn.yaml"),
                        out_dir=OUT / "water_turn")
    splash = run_scenario(load_scenario(SCENARIOS / "water_landing.yaml"))
    print(f"\nstraight interfacial flight: {line.mean_speed * 100:.2f} cm/s")
    print(f"turn scenario path: ended at ({turn.final_position[0] * 100:.2f}, "
          f"{turn.final_position[1] * 100:.2f}) cm")
    print("water landing events:")
    for e in splash.events:
        print(f"  t={e['time_s'] * 1e3:6.1f} ms  {e['kind']}: {e['outcome']}")

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(11, 4))
    ax1.plot(masses * 1e6, np.array(margins) * 1e3)
    ax1.axhline(0.0, color="r", lw=0.8)
    ax1.axvline(95.0, color="k", ls="--", lw=0.8, label="as built (95 mg)")
    ax1.set_xlabel("supported mass [mg]")
    ax1.set_ylabel("flotation margin [mN]")
    ax1.set_title("where the 5 cm leg set stops floating")
    ax1.legend()

    for name, out in (("straight 35 Hz", OUT / "water_line"),
                      ("turn 30 Hz", OUT / "water_turn")):
        rows = (out / "trajectory.csv").read_text().splitlines()
        header = rows[0].split(",")
        xi, yi = header.index("x"), header.index("y")
        xy = np.array([[float(r.split(",")[xi]), float(r.split(",")[yi])]
                       for r in rows[1:]])
        ax2.plot(xy[:, 0] * 100, xy[:, 1] * 100, label=name)
    ax2.set_xlabel("x [cm]"); ax2.set_ylabel("y [cm]")
    ax2.axis("equal"); ax2.legend(); ax2.set_title("interfacial tracks")
    fig.tight_layout()
    fig.savefig(OUT / "leg_design_and_water.png", dpi=130)
    print("saved", OUT / "leg_design_and_water.png")


if __name__ == "__main__":
    main()
