#!/usr/bin/env python3
"""
Refine every suite root by bisection and store the digits in the suite data file.
Roots with an exact expression (f2 = 0, f7 = 1/3) are left as they are.
Run again after changing an expression or a bracket.
"""
import json
import sys
import os

# Add the app directory to path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

# Load .env file if it exists
from dotenv import load_dotenv
load_dotenv()

import mpmath

from app.config import settings
from app.numerics.precision import working_precision
from app.numerics.problems.refine import refine_root
from app.numerics.problems.suite import DATA_FILE, Problem, load_entries


def main():
    digits = int(sys.argv[1]) if len(sys.argv) > 1 else settings.REFERENCE_DIGITS

    print("=" * 60)
    print("Refining suite reference roots")
    print("=" * 60)
    print(f"Bisection depth: {digits} digits")

    with open(DATA_FILE, "r", encoding="utf-8") as fh:
        entries = json.load(fh)

    items = {item.name: item for item in load_entries()}
    success_count = 0
    error_count = 0

    for i, entry in enumerate(entries, 1):
        item = items[entry["name"]]
        if item.exact_root:
            print(f"  [{i}/{len(entries)}] {item.name}: exact root {item.exact_root}, skipped")
            continue
        if not item.bracket:
            print(f"  [{i}/{len(entries)}] {item.name}: no bracket, skipped")
            continue

        problem = Problem.from_entry(item)
        try:
            with working_precision(digits + 10):
                root = refine_root(problem, item.bracket, digits)
                residual = abs(problem.value(root))
                entry["root"] = mpmath.nstr(root, digits)
            success_count += 1
            print(f"  [{i}/{len(entries)}] {item.name}: {mpmath.nstr(root, 20)}...  |f| = {mpmath.nstr(residual, 3)}")
        except Exception as e:
            error_count += 1
            print(f"  [{i}/{len(entries)}] {item.name} - Error: {e}")

    with open(DATA_FILE, "w", encoding="utf-8") as fh:
        json.dump(entries, fh, indent=2)
        fh.write("\n")

    print("\n" + "=" * 60)
    print("Refinement complete!")
    print(f"  Refined: {success_count}")
    print(f"  Failed:  {error_count}")
    print(f"  Written: {DATA_FILE}")
    print("=" * 60)


if __name__ == "__main__":
    main()
