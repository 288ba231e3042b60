#!/usr/bin/env python3
"""Bare-cavity mirror spectrum map: rescaled S_q over the (omega, detuning)
plane with the atomic coupling off.  The single peak red-shifts below
omega_m and passes through its height minimum near delta = kappa/2."""
import os
from pathlib import Path

from optobec.cli import main

os.chdir(Path(__file__).resolve().parents[1])
os.makedirs("reproduce/out", exist_ok=True)

raise SystemExit(main([
    "spectrum",
    "--config", "configs/empty_cavity.json",
    "--observable", "q",
    "--omega-grid", "0.5*omega_m:1.5*omega_m:401",
    "--map", "omega-delta",
    "--delta-grid", "0.02*kappa:2*kappa:100",
    "--normalize",
    "--out", "reproduce/out/fig1b.csv",
    "--plot",
]))
