#!/usr/bin/env python3
"""Generate the synthetic preference profile shipped in data/.

146 voters rank nine courses. Rankings are drawn from a Plackett-Luce model
with geometrically decaying course weights (gamma), which yields the skewed,
correlated course popularity typical of real elective-course preference data:
a few courses are widely wanted, the tail much less so.

Rerunning this script reproduces data/courses_synth_146.soc bit for bit.
"""

import random
from collections import Counter
from pathlib import Path

COURSES = 9
VOTERS = 146
GAMMA = 0.30
SEED = 20240314


def sample_order(rng: random.Random) -> tuple:
    weights = [GAMMA**j for j in range(COURSES)]
    remaining = list(range(COURSES))
    order = []
    while remaining:
        total = sum(weights[c] for c in remaining)
        pick = rng.random() * total
        acc = 0.0
        for c in remaining:
            acc += weights[c]
            if pick <= acc:
                order.append(c)
                remaining.remove(c)
                break
        else:
            order.append(remaining.pop())
    return tuple(order)


def main() -> None:
    rng = random.Random(SEED)
    counts = Counter(sample_order(rng) for _ in range(VOTERS))

    out = Path(__file__).resolve().parent.parent / "data" / "courses_synth_146.soc"
    lines = [
        "# FILE NAME: courses_synth_146.soc",
        "# TITLE: Synthetic elective-course preferences (146 students, 9 courses)",
        "# DESCRIPTION: Synthetic stand-in profile drawn from a Plackett-Luce model",
        f"#   with geometric course weights (gamma={GAMMA}, seed={SEED});",
        "#   regenerate with scripts/make_profile.py.",
        "# DATA TYPE: soc",
        f"# NUMBER ALTERNATIVES: {COURSES}",
        f"# NUMBER VOTERS: {VOTERS}",
        f"# NUMBER UNIQUE ORDERS: {len(counts)}",
    ]
    lines += [f"# ALTERNATIVE NAME {c + 1}: Course {c + 1}" for c in range(COURSES)]
    for order, count in sorted(counts.items(), key=lambda kv: (-kv[1], kv[0])):
        lines.append(f"{count}: {', '.join(str(c + 1) for c in order)}")
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {out} ({len(counts)} distinct orders)")


if __name__ == "__main__":
    main()
