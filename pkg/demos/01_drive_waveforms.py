#!/usr/bin/env python3
"""Two-harmonic drive signals and the stroke asymmetry they create.

Adding a second harmonic at twice the flapping frequency makes one stroke
direction faster than the other. Drag on the wing grows with the square of
its speed, so the fast half-stroke wins and the cycle leaves a net fore/aft
force behind: that single trick propels the robot on the ground and on the
water surface, and steers it in flight.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from flapsim import DriveSignal, WingKinematicsMap, voltage_at, wing_tip_velocity
from flapsim.aero import AeroParams, cycle_mean_horizontal_force

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)


def main():
    kin = WingKinematicsMap()
    aero = AeroParams()
    plain = DriveSignal(0.0, 210.0, 0.0, 60.0)
    shaped = DriveSignal(0.0, 210.0, 0.3, 60.0)
    t = np.linspace(0.0, 2.0 * plain.period, 2000)

    fig, axes = plt.subplots(3, 1, figsize=(7, 8), sharex=True)
    axes[0].plot(t * 1e3, voltage_at(plain, t), label="fundamental only")
    axes[0].plot(t * 1e3, voltage_at(shaped, t), label="with 2nd harmonic (0.3)")
    axes[0].set_ylabel("drive voltage [V]")
    axes[0].legend()

    axes[1].plot(t * 1e3, wing_tip_velocity(shaped, kin, t))
    axes[1].axhline(0.0, color="k", lw=0.5)
    axes[1].set_ylabel("wing tip speed [m/s]")

    mus = np.linspace(-0.3, 0.3, 61)
    force = [cycle_mean_horizontal_force(DriveSignal(0.0, 210.0, m, 60.0), kin, aero)
             for m in mus]
    axes[2].plot(mus, np.array(force) * 1e6)
    axes[2].axhline(0.0, color="k", lw=0.5)
    axes[2].set_xlabel("second-harmonic ratio  /  time [ms] above")
    axes[2].set_ylabel("cycle-mean force [uN]")
    fig.tight_layout()
    fig.savefig(OUT / "drive_waveforms.png", dpi=130)

    v = np.asarray(wing_tip_velocity(shaped, kin, t))
    print("peak rearward tip speed: %.2f m/s" % v.max())
    print("peak forward  tip speed: %.2f m/s" % -v.min())
    print("cycle-mean force per wing at ratio 0.3: %.2f uN"
          % (1e6 * cycle_mean_horizontal_force(shaped, kin, aero)))
    print("saved", OUT / "drive_waveforms.png")


if __name__ == "__main__":
    main()
