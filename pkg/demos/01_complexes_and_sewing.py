"""
Building complexes and sewing them together.

A filled triangle is closed under faces automatically.  Sewing a second
triangle on at one vertex unites the grades; attaching an extra edge whose
ends land on vertices 1 and b closes a brand new triangle {1, 2, b}.
Finally, gluing two vertices of a triangle gives a cone, which only a
Delta complex can hold.
"""

from deltashape import KindViolationError, as_delta, build_complex, glue, is_valid, sew


def show(name, cx):
    print(f"{name}:")
    for k in range(3):
        print(f"  X{k} = {sorted(c.vertices for c in cx.grade(k))}")


A = build_complex([(0, 1, 2)])
show("A", A)
print("  face maps of {0,1,2}:", [A.face((0, 1, 2), j).vertices for j in range(3)])

# label the second triangle a=10, b=11, c=12 and sew a onto vertex 2
B = build_complex([(10, 11, 12)])
C = sew(A, B, 2, 10)
show("C = sew(A, B) at 2=a", C)

# the edge c'-d is sewn at 1, then its free end d is glued to b (11)
edge = build_complex([(20, 21)])
D = glue(sew(C, edge, 1, 20), 11, 21)
show("D = C with the edge 1-b attached", D)
print("  new triangle {1, 2, b} present:", any(c.vertices == (1, 2, 11) for c in D.X2))
print("  valid:", is_valid(D))

# identifying two vertices of one simplex is illegal in an ordered complex ...
try:
    glue(A, 0, 1)
except KindViolationError as exc:
    print("ordered glue refused:", exc)

# ... but fine as a Delta complex, where cells keep their identity via tags
cone = glue(as_delta(A), 0, 1)
show("cone (Delta)", cone)
print("  valid:", is_valid(cone))
print("  JSON:", cone.to_json()[:120], "...")
