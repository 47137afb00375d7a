"""Regenerate zsigmondy_oracle.csv: primitive prime divisors of q^n - 1 by full factorization."""
from sympy import factorint, primerange

rows = []
for p in primerange(2, 129):
    q = p
    while q <= 128:
        for n in range(2, 13):
            ppd = sorted(l for l in factorint(q**n - 1) if all((q**k - 1) % l for k in range(1, n)))
            rows.append((q, n, " ".join(map(str, ppd))))
        q *= p
rows.sort()
with open(__file__.replace("gen_zsigmondy_oracle.py", "zsigmondy_oracle.csv"), "w") as f:
    f.write("q,n,ppds\n" + "".join(f"{q},{n},{s}\n" for q, n, s in rows))
