# Above this number of grid nodes, evaluate density integrands with NumExpr
# instead of with NumPy. NumExpr is slower for small arrays due to its
# setup overhead. Once grids reach ~100s of thousands of nodes, the
# speedup in the computation makes up for this overhead.
NUMEXPR_THRESHOLD = 200000
