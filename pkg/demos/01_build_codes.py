# ## Building the cyclic codes
#
# A code is determined by (q, m, h) and a variant.  The length is
# n = q^m - 1; the generator polynomial kills alpha^a for every exponent a
# whose base-q expansion has at most h nonzero digits.

import json

from rmcodes import CodeSpec, build_code, code_to_json, encode, is_member

# The binary case with (m, h) = (3, 1) is the [7, 4, 3] Hamming code.
inst = build_code(CodeSpec(2, 3, 1))
print(inst)
print("generator coefficients (low to high):", list(inst.gen_poly))
print("zero exponents:", list(inst.zero_exponents))

# The mirrored variant also kills the inverse zeros and the point 1, which
# shrinks the dimension to n - 1 - 2*deg(gen) when the zero sets are disjoint.
mirrored = build_code(CodeSpec(2, 4, 1, "omega_bar"))
print()
print(mirrored)
print("zero exponents:", list(mirrored.zero_exponents))

# ## Encoding and membership
#
# Encoding multiplies the message polynomial by the generator; membership
# is decided by evaluating at one exponent per zero coset.

word = encode(inst, [1, 0, 1, 1])
print()
print("codeword:", list(word.coeffs), "weight:", word.weight)
print("is_member:", is_member(inst, word.coeffs))

corrupted = list(word.coeffs)
corrupted[0] ^= 1
print("after flipping one bit:", is_member(inst, corrupted))

# ## Serialization
#
# Field elements serialize as integer indices: the base-p digits of an
# index are the element's polynomial-basis coordinates.

doc = code_to_json(build_code(CodeSpec(4, 2, 1)))
print()
print(json.dumps(doc, indent=2))
