#!/usr/bin/env python3
"""Electrical power and the cost of transport across locomotion modes.

The actuators are capacitive loads, so mean electrical power grows
linearly with flapping frequency while ground speed grows faster than
that; cost of transport therefore falls as the robot flaps harder. Flight
beats ambulation by a wide margin, but hovering in place has no cost of
transport at all, only a power draw.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from flapsim.energetics import ActuatorElectrical, cot_frequency_sweep, sample_power
from flapsim.scenario import hover_power_point, load_scenario, run_scenario
from flapsim.waveform import DriveSignal

OUT = pathlib.Path(__file__).parent / "output"
SCENARIOS = pathlib.Path(__file__).parent.parent / "scenarios"
OUT.mkdir(exist_ok=True)


def main():
    elec = ActuatorElectrical()
    sig = DriveSignal(0.0, 250.0, 0.3, 60.0)
    trace = sample_power([sig, sig], elec, 2.0 / 60.0)

    rows = cot_frequency_sweep([40.0, 50.0, 60.0, 70.0, 80.0],
                               amplitude=250.0, include_hover=True)
    print(f"{'f [Hz]':>7}  {'speed [cm/s]':>12}  {'power [mW]':>10}  {'CoT [J/m]':>9}")
    for r in rows:
        speed = "--" if r.mean_speed is None else f"{r.mean_speed * 100:.2f}"
        cot = "n/a" if r.cost_of_transport is None else f"{r.cost_of_transport:.3f}"
        print(f"{r.frequency_hz:7.0f}  {speed:>12}  {r.mean_power * 1e3:10.2f}  {cot:>9}  {r.note}")

    flight = run_scenario(load_scenario(SCENARIOS / "flight_cot.yaml"))
    hover = hover_power_point()
    ground_best = min(r.cost_of_transport for r in rows if r.cost_of_transport)
    print(f"\nflight cost of transport: {flight.cost_of_transport:.4f} J/m "
          f"over {flight.path_length:.2f} m")
    print(f"best ground cost of transport: {ground_best:.3f} J/m "
          f"({ground_best / flight.cost_of_transport:.0f}x the flight cost)")
    print(f"hover power draw: {hover.mean_power * 1e3:.1f} mW at {hover.amplitude:.0f} V")

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(11, 4))
    ax1.plot(trace.time * 1e3, trace.power_signed * 1e3, lw=0.8, label="signed")
    ax1.plot(trace.time * 1e3, trace.power_rectified * 1e3, lw=0.8, label="rectified")
    ax1.set_xlabel("t [ms]"); ax1.set_ylabel("power [mW]")
    ax1.set_title("instantaneous electrical power (both wings)")
    ax1.legend()

    ground = [r for r in rows if r.cost_of_transport]
    ax2.plot([r.frequency_hz for r in ground],
             [r.cost_of_transport for r in ground], marker="o", label="ground")
    ax2.axhline(flight.cost_of_transport, color="g", ls="--", label="flight")
    ax2.set_xlabel("flap frequency [Hz]")
    ax2.set_ylabel("cost of transport [J/m]")
    ax2.set_yscale("log")
    ax2.set_title("cost of transport falls with frequency")
    ax2.legend()
    fig.tight_layout()
    fig.savefig(OUT / "energetics.png", dpi=130)
    print("saved", OUT / "energetics.png")


if __name__ == "__main__":
    main()
