#!/usr/bin/env python3
# Copyright 2026 The authcrypt Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Brute-force oracle for the toy-group known-answer vectors.

Uses only repeated multiplication and exhaustive inverse search, never
pow() or any modular-inverse helper, so it is independent of the C++
arithmetic path. The frozen values below are what the C++ tests assert;
this script fails if any of them disagrees with brute force.
"""

import sys

P, Q, G = 23, 11, 4


def power(base, exp, mod):
    acc = 1 % mod
    for _ in range(exp):
        acc = (acc * base) % mod
    return acc


def inverse(a, mod):
    hits = [x for x in range(1, mod) if (a * x) % mod == 1]
    assert len(hits) == 1, (a, mod)
    return hits[0]


def is_prime_trial(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def compute():
    out = {}
    # numeric
    out["pow_4_11_23"] = power(4, 11, 23)
    out["pow_12_7_23"] = power(12, 7, 23)
    out["inv_5_11"] = inverse(5, 11)
    out["inv_7_11"] = inverse(7, 11)
    out["inv_7_23"] = inverse(7, 23)
    out["mersenne31_prime"] = is_prime_trial(2**31 - 1)

    # group
    x_a, x_b = 3, 5
    y_a, y_b = power(G, x_a, P), power(G, x_b, P)
    out["y_a"], out["y_b"] = y_a, y_b
    out["g_order_q"] = power(G, Q, P) == 1 and G != 1 and (P - 1) % Q == 0

    # Ma-Chen honest run: k = 7, stub r = 4
    k, r = 7, 4
    v = power((G * y_b) % P, k, P)
    out["mc_v"] = v
    out["mc_e"] = v % Q
    out["mc_s"] = (k - x_a * r) % Q
    s = out["mc_s"]
    v_recv = (power((G * y_b) % P, s, P) * power(y_a, (r * (x_b + 1)) % Q, P)) % P
    out["mc_v_recomputed"] = v_recv
    k1_star = (power(y_b, s, P) * power(y_a, r * x_b, P)) % P
    out["mc_k1_star"] = k1_star
    out["mc_k1"] = k1_star % Q
    e_prime = (power(G, s, P) * power(y_a, r, P) * out["mc_k1"]) % P
    out["mc_e_prime_mod_p"] = e_prime
    out["mc_e_prime"] = e_prime % Q
    e_unreduced = (power(G, s, P) * power(y_a, r, P) * k1_star) % P
    out["mc_e_unreduced"] = e_unreduced % Q
    y_ab = power(G, x_a * x_b, P)
    out["y_ab"] = y_ab
    out["mc_v_shared"] = (power((G * y_b) % P, s, P) * power(y_ab, r, P)
                          * power(y_a, r, P)) % P
    r_inv = inverse(r, Q)
    out["r_inv"] = r_inv
    exp3 = (-s * r_inv) % Q
    out["recovered_y_ab"] = (inverse(y_a, P) * power(v, r_inv, P)
                             * power((G * y_b) % P, exp3, P)) % P

    # forgery: y_A = 18, a = 2, b = 5, stub r = 7
    a, b, r = 2, 5, 7
    v = (power(G, a, P) * power(y_a, b, P)) % P
    out["forge_v"] = v
    out["forge_s"] = (r * a * inverse(b, Q)) % Q
    out["forge_x_b"] = (b * inverse(r, Q) - 1) % Q
    out["forge_y_b"] = power(G, out["forge_x_b"], P)
    fs, fx, fy = out["forge_s"], out["forge_x_b"], out["forge_y_b"]
    out["forge_v_check"] = (power((G * fy) % P, fs, P)
                            * power(y_a, r * (fx + 1), P)) % P

    # improved: k = 7, stub r = 4
    k, r = 7, 4
    out["imp_t1"] = power(G, k, P)
    out["imp_t2"] = power(y_b, k, P)
    out["imp_s"] = (k + r * x_a) % Q
    t1 = (power(G, out["imp_s"], P) * power(inverse(y_a, P), r, P)) % P
    out["imp_t1_recv"] = t1
    out["imp_t2_recv"] = power(t1, x_b, P)

    # Fraction of honest (x_A, x_B, k, r) where the published arbitrator
    # value e' equals e, enumerated exhaustively. Independent of the hash.
    same = total = 0
    for xa in range(1, Q):
        for xb in range(1, Q):
            ya, yb = power(G, xa, P), power(G, xb, P)
            for k in range(1, Q):
                v = power((G * yb) % P, k, P)
                for r in range(Q):
                    s = (k - xa * r) % Q
                    k1 = (power(yb, s, P) * power(ya, (r * xb) % Q, P)) % P % Q
                    ep = (power(G, s, P) * power(ya, r, P) * k1) % P % Q
                    total += 1
                    same += ep == v % Q
    out["toy_e_prime_equals_e"] = f"{same}/{total}"
    out["toy_subgroup_below_q"] = sum(1 for i in range(Q) if power(G, i, P) < Q)
    return out


FROZEN = {
    "pow_4_11_23": 1, "pow_12_7_23": 16, "inv_5_11": 9, "inv_7_11": 8,
    "inv_7_23": 10, "mersenne31_prime": True,
    "y_a": 18, "y_b": 12, "g_order_q": True,
    "mc_v": 13, "mc_e": 2, "mc_s": 6, "mc_v_recomputed": 13,
    "mc_k1_star": 16, "mc_k1": 5, "mc_e_prime_mod_p": 17, "mc_e_prime": 6,
    "mc_e_unreduced": 2, "y_ab": 3, "mc_v_shared": 13, "r_inv": 3,
    "recovered_y_ab": 3,
    "forge_v": 2, "forge_s": 5, "forge_x_b": 6, "forge_y_b": 2,
    "forge_v_check": 2,
    "imp_t1": 8, "imp_t2": 16, "imp_s": 8, "imp_t1_recv": 8,
    "imp_t2_recv": 16,
    "toy_e_prime_equals_e": "6600/11000", "toy_subgroup_below_q": 7,
}


def main():
    got = compute()
    bad = [k for k in FROZEN if got.get(k) != FROZEN[k]]
    for key in sorted(got):
        print(f"{key} = {got[key]}")
    if bad:
        print("MISMATCH:", ", ".join(f"{k} got {got.get(k)} frozen {FROZEN[k]}" for k in bad))
        return 1
    print("all frozen toy vectors confirmed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
