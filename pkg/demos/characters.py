"""Characters mod q: labels, conductors, parity and exact values."""
import math

from pvlab import character, enumerate_characters, factorize, legendre_character, primitive_characters

q = 45
print(factorize(q), "generators:", [g for g, _ in enumerate_characters(q)[0].basis.generators])

# every character mod 45, with the modulus that really induces it
for chi in enumerate_characters(q):
    print(f"{chi.name:>6}  order {chi.order:2d}  parity {chi.parity:+d}  conductor {chi.conductor}")

print(len(primitive_characters(q)), "of", factorize(q).phi, "are primitive")

# values are exact roots of unity until you ask for floats
chi = character(q, 7)
print(chi(2), chi(4), chi(2) * chi(2) == chi(4))
print(complex(chi(2)))

leg = legendre_character(11)
print("quadratic residues mod 11:", [n for n in range(1, 11) if leg(n).is_one])
print("sum over a period:", sum(complex(leg(n)) for n in range(11)))
print("gcd check:", [n for n in range(q) if chi(n).zero] == [n for n in range(q) if math.gcd(n, q) > 1])
