#!/usr/bin/env python3
# Copyright 2026 The IPS Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the synthetic 63-container manifest used by the scenario tests."""

import csv
import datetime as dt
import random
import sys

DAY = dt.date(2026, 3, 16)
# Booked appointments per block; the morning peak is what congests the gate.
PEAK = [9, 8, 7, 3, 3, 0, 0, 0, 0]
UNBOOKED = 20
DEMURRAGE = 13

CARGO = ["perishable", "pharmaceutical", "retail", "electronics", "automotive",
         "general", "textiles", "machinery", "raw_material"]
CITIES = ["Dallas", "Memphis", "Atlanta", "Chicago", "Denver", "Phoenix", "Columbus"]
HEADER = ["container_id", "arrival_date", "free_days", "weight_tons", "cargo_type",
          "pickup_probability", "consignee_id", "carrier_id", "carrier_visits_per_month",
          "owner_id", "appointment_block", "destination"]


def main(path, seed=2026):
    rng = random.Random(seed)
    carriers = {f"CR{i:02d}": rng.choice([2, 4, 6, 8, 12, 20]) for i in range(1, 9)}
    rows = []

    def row(kind, block=None):
        free = rng.choice([4, 5, 5, 6, 7])
        if kind == "demurrage":
            passed = free + rng.randint(0, 4)
        else:
            passed = rng.randint(0, free - 1)
        carrier = rng.choice(sorted(carriers))
        blank_prob = rng.random() < 0.15
        return {
            "arrival_date": (DAY - dt.timedelta(days=passed)).isoformat(),
            "free_days": free,
            "weight_tons": round(rng.uniform(4.0, 28.0), 1),
            "cargo_type": rng.choice(CARGO),
            "pickup_probability": "" if blank_prob else round(rng.uniform(0.2, 0.95), 2),
            "consignee_id": f"CN{rng.randint(1, 12):02d}",
            "carrier_id": carrier if kind == "booked" or rng.random() < 0.7 else "",
            "carrier_visits_per_month": carriers[carrier],
            "owner_id": f"OW{rng.randint(1, 9):02d}",
            "appointment_block": "" if block is None else block,
            "destination": rng.choice(CITIES),
        }

    for block, n in enumerate(PEAK):
        rows += [row("booked", block) for _ in range(n)]
    rows += [row("free") for _ in range(UNBOOKED)]
    rows += [row("demurrage") for _ in range(DEMURRAGE)]
    rng.shuffle(rows)
    for i, r in enumerate(rows):
        r["container_id"] = f"IPSU{3000001 + i * 7:07d}"

    with open(path, "w", newline="") as f:
        w = csv.DictWriter(f, fieldnames=HEADER, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/fixture_63.csv")
