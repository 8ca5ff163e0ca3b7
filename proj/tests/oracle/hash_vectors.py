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

"""Reference values for the hash framing, computed with hashlib only.

Prints the vectors frozen into tests/hashing_test.cc.
"""

import hashlib
import struct


def framed(tag, parts):
    out = struct.pack(">I", len(tag)) + tag
    for p in parts:
        out += struct.pack(">I", len(p)) + p
    return out


def sha(b):
    return hashlib.sha256(b).digest()


def minimal(n):
    return n.to_bytes((n.bit_length() + 7) // 8, "big")


def to_zq(parts, q):
    return int.from_bytes(sha(framed(b"authcrypt/H/zq", parts)), "big") % q


def to_zp_star(parts, p):
    enc = framed(b"authcrypt/H/zp*", parts)
    bits = p.bit_length()
    width = (bits + 7) // 8
    retry = 0
    while True:
        stream = b""
        block = 0
        while len(stream) < width:
            stream += sha(struct.pack(">II", retry, block) + enc)
            block += 1
        stream = bytearray(stream[:width])
        stream[0] &= 0xFF >> (width * 8 - bits)
        v = int.from_bytes(stream, "big") % p
        if v:
            return v
        retry += 1


def kdf(t2, p):
    width = (p.bit_length() + 7) // 8
    return sha(framed(b"authcrypt/h/session-key", []) + t2.to_bytes(width, "big"))


def keystream_xor(key, data):
    out = bytearray(data)
    for i in range(0, len(out), 32):
        block = sha(key + struct.pack(">Q", i // 32))
        for j in range(min(32, len(out) - i)):
            out[i + j] ^= block[j]
    return bytes(out)


print("raw(abc) =", sha(framed(b"authcrypt/H/raw", [b"abc"])).hex())
print("zq(abc, 11) =", to_zq([b"abc"], 11))
q160 = (1 << 160) - 47  # a 160-bit prime
print("zq(abc, 2^160-47) =", to_zq([b"abc"], q160))
print("zp*(int 5, 23) =", to_zp_star([minimal(5)], 23))
p2 = (1 << 521) - 1
print("zp*(int 5, 2^521-1) =", hex(to_zp_star([minimal(5)], p2)))
print("kdf(16, 23) =", kdf(16, 23).hex())
print("E(kdf(16,23), 'attack at dawn, twice over, please') =",
      keystream_xor(kdf(16, 23), b"attack at dawn, twice over, please").hex())
