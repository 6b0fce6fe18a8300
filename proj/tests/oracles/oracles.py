"""Independent oracle computations (sympy) for values frozen in the C++ tests.

Run: python3 tests/oracles/oracles.py
Every printed value appears verbatim in tests/*.cpp.
"""
import sympy as sp


def cartan(kind, n):
    if kind == "A":
        m = sp.zeros(n)
        for i in range(n):
            m[i, i] = -2
            if i + 1 < n:
                m[i, i + 1] = m[i + 1, i] = 1
        return m
    if kind == "D":
        m = cartan("A", n - 1).row_insert(n - 1, sp.zeros(1, n - 1)).col_insert(n - 1, sp.zeros(n, 1))
        m[n - 1, n - 1] = -2
        m[n - 1, n - 3] = m[n - 3, n - 1] = 1
        return m
    if kind == "E8":
        m = cartan("A", 7).row_insert(7, sp.zeros(1, 7)).col_insert(7, sp.zeros(8, 1))
        m[7, 7] = -2
        m[7, 4] = m[4, 7] = 1
        return m
    raise ValueError(kind)


def discrepancies(m, pa):
    # K·E_i = 2 p_a - 2 - E_i^2 ; solve M a = K·E
    k = sp.Matrix([2 * pa[i] - 2 - m[i, i] for i in range(m.shape[0])])
    return list(m.LUsolve(k))


print("det A_n:", [cartan("A", n).det() for n in range(1, 7)])
print("det D4, D5:", cartan("D", 4).det(), cartan("D", 5).det())
print("det E8:", cartan("E8", 8).det())
print("minors A3:", [cartan("A", 3)[:k, :k].det() for k in range(1, 4)])

chain = sp.Matrix([[-2, 1], [1, -3]])
print("chain(-2,-3) inverse:", chain.inv())
alpha = chain.LUsolve(sp.Matrix([-1, 0]))
print("pullback of C meeting E1 once over chain(-2,-3):", list(alpha))
print("Mumford C^2 correction:", alpha[0])
print("discrepancies chain(-2,-3):", discrepancies(chain, [0, 0]))
print("discrepancy (-4):", discrepancies(sp.Matrix([[-4]]), [0]))
print("discrepancies A2:", discrepancies(cartan("A", 2), [0, 0]))
cusp = sp.Matrix([[-3, 1, 1], [1, -2, 1], [1, 1, -2]])
print("cusp (-3,-2,-2) det:", cusp.det(), "discrepancies:", discrepancies(cusp, [0, 0, 0]))
print("3-cycle (-2) det:", sp.Matrix([[-2, 1, 1], [1, -2, 1], [1, 1, -2]]).det())
print("elliptic sweep:", [discrepancies(sp.Matrix([[-d]]), [1])[0] for d in range(1, 11)])
print("nodal rational (-1):", discrepancies(sp.Matrix([[-1]]), [1]))
# Two (-1)-curves meeting once: not negative definite
print("det [[-1,1],[1,-1]]:", sp.Matrix([[-1, 1], [1, -1]]).det())
# Chain (-3,-3) discrepancies
print("discrepancies chain(-3,-3):", discrepancies(sp.Matrix([[-3, 1], [1, -3]]), [0, 0]))

# W of the example: order C1', C2', l, F, E1, E2
W = sp.Matrix([
    [-1, 0, 0, 1, 1, 0],
    [0, -1, 0, 1, 0, 1],
    [0, 0, -2, 0, 1, 1],
    [1, 1, 0, 0, 0, 0],
    [1, 0, 1, 0, -1, 0],
    [0, 1, 1, 0, 0, -1],
])
pa = [1, 1, 0, 0, 0, 0]
K = sp.Matrix([2 * pa[i] - 2 - W[i, i] for i in range(6)])
print("K_W . curves:", list(K.T))
c1c2 = sp.Matrix([1, 1, 0, 0, 0, 0])
print("(K_W + C1' + C2') . curves:", list((K.T + (W * c1c2).T)))
print("det W:", W.det())
# S~: contract C1', C2'. Mumford l^2
sub = W.extract([0, 1], [0, 1])
for name, idx in [("l", 2), ("F", 3), ("E1", 4)]:
    rhs = -W.extract([0, 1], [idx])
    a = sub.LUsolve(rhs)
    v = sp.zeros(6, 1)
    v[idx] = 1
    v[0], v[1] = a[0], a[1]
    print(f"S~ Mumford {name}^2:", (v.T * W * v)[0])
# nef cone in span {l} tested by E1 (pullback pairing)
v = sp.zeros(6, 1); v[2] = 1
print("S~ l.E1 (Mumford):", (v.T * W * sp.Matrix([0, 0, 0, 0, 1, 0]))[0])
