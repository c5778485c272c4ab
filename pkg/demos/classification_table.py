"""Count solutions of the generic case over a grid of t, then confirm that
none of them extends to nine mutually separated points."""

from fractions import Fraction

from sicsets.classification import case_iv_solutions, extension_check, fake_sic, scan_table, verify_derivations

for line in verify_derivations().lines():
    print(line)

grid = [Fraction(k, 20) for k in range(1, 29)]
table = scan_table(grid, workers=4)
print("\n   t   count")
for t, n in table.rows:
    print(f"{float(t):5.2f}   {n}")
print("breakpoints |t| ~", ", ".join(f"{abs(b):.4f}" for b in table.breakpoints))

largest = max(len(extension_check(s).clique) for t in grid for s in case_iv_solutions(t))
print(f"\nlargest mutually separated subset found: {largest} (a SIC needs 9)")

f = fake_sic()
print(f"fake SIC: roots {[round(x, 5) for x in f.roots]}, {f.separated_count}/36 pairs separated")
