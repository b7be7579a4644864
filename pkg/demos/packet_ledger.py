"""Build and audit the disk-packet ledger for sin(e^z).

Each packet is a small disk around a zero of e^z - n*pi on the real
axis.  On such a disk |f| stays below 2 and |f'| stays above pi*n/4,
so every packet that fits inside the ball B_r contributes an exact
area quantum pi/4096 to a certified lower bound.  The count of
fitting packets grows like e^r, which is where the exponential lower
bound comes from.

Run:  python3 demos/packet_ledger.py
"""

import math

from graphgrowth import (
    CertifyMethod,
    GraphFamily,
    certify_packet,
    count_packets_in_ball,
    make_packet,
    packet_area_lower,
    packet_growth_lower_bound,
    verify_disjoint,
)

# a few individual packets, certified by interval arithmetic
header = "max |f|", "min |f'|"
print(f"{'n':>5} {'center':>10} {'radius':>10} {header[0]:>10} {header[1]:>10} {'ok':>4}")
for n in (1, 2, 5, 10, 50, 100):
    p = certify_packet(make_packet(GraphFamily.SIN_EXP, n),
                       CertifyMethod.INTERVAL_PROOF)
    cert = p.certificate
    print(f"{n:>5} {p.center:>10.5f} {p.radius:>10.2e}"
          f" {cert.max_abs_f:>10.2e} {cert.min_abs_fprime:>10.4f}"
          f" {str(cert.certified):>4}")

# the whole ledger is pairwise disjoint
rep = verify_disjoint(GraphFamily.SIN_EXP, 1, 1000)
print()
print(f"packets 1..1000 disjoint: {rep.all_disjoint}, min gap {rep.min_gap:.3e}")

# count inside B_r and the resulting area bound
print()
print(f"{'r':>5} {'count':>8} {'area bound':>12} {'e^(r-2)/pi':>12}")
for r in (4.0, 6.0, 8.0, 10.0, 12.0):
    k = count_packets_in_ball(GraphFamily.SIN_EXP, r)
    lb = packet_growth_lower_bound(GraphFamily.SIN_EXP, r)
    print(f"{r:>5.1f} {k:>8d} {lb:>12.5f} {math.exp(r - 2) / math.pi:>12.1f}")

print()
print("each packet contributes exactly pi/4096 =", math.pi / 4096)
