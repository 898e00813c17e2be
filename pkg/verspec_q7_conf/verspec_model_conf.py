"""
Model configuration of the Q7 fibration and its weak coupling limit.

It is ingested by verspec.conf.model_conf_load, which reads it into verspec.conf.

The elliptic fibration Y is the cubic

    y x^2 - e1 y^3 + e2 y^2 z + e3 x z^2 + e4 y z^2 + e5 z^3 = 0

in P(O + O + L) over a base B, with e3 a section of L and the other e_i sections of L^2.
The degeneration is e1 = beta, e2 = 2 theta, e3 = t^2 rho, e4 = h, e5 = t iota.

All classes below are multiples of c1(L) on B.
"""

#########################################################
# Y is a section of O(3) x L^2:  [Y] = 3 zeta + 2 L
hypersurface_class = (3, 2)  # (zeta coefficient, L coefficient)
#########################################################


#########################################################
# Strata of the limiting discriminant  h^2 iota^2 (theta^2 + h beta) = 0
#
# "classes": the stratum is a smooth complete intersection of these classes.
# "singular": a hypersurface of the given class, with a transversal A1 singularity
#             along the complete intersection "center".
strata = {
    'B': {'classes': []},
    'O': {'classes': [2]},  # h = 0, the orientifold plane
    'D1': {'classes': [2]},  # iota^2 = 0, taken reduced: multiplicity 2 lives in the fiber table
    'S1': {'classes': [2, 2]},  # iota = h = 0
    'D2': {'singular': {'class': 4, 'center': [2, 2, 2]}},  # theta^2 + h beta = 0
    'S2': {'classes': [2, 2, 2]},  # theta = h = beta = 0
}
#########################################################


#########################################################
# Fibrations over B of the components of the resolved central fiber.
# Chains of closed strata with the Euler characteristic of the fiber over each open part.
fiber_tables = {
    # smooth conics / two disjoint lines / two lines meeting at a point
    'calD1': [('B', 2), ('D1', 4), ('S1', 3)],
    # smooth conics / two lines meeting at a point / a double line
    'calD2': [('B', 2), ('D2', 3), ('S2', 2)],
    # double cover of B ramified over O
    'X': [('B', 2), ('O', 1)],
}

# Quadratic form ranks of the conic fibers of calD2, over B \ D2, D2 \ S2, S2.
conic_ranks = {
    'calD2': [('B', 3), ('D2', 2), ('S2', 1)],
}

# The resolved central fiber: a normal crossing divisor with two reduced components meeting along X.
normal_crossing = {
    'components': [('calD1', 1), ('calD2', 1)],
    'intersection': 'X',
}
#########################################################


#########################################################
# Orientifold Euler characteristics: chi_o(D) = m chi(D) - chi(S cap O)
orientifold = 'O'
branes = {
    'D1': {'multiplicity': 2, 'singular_on_orientifold': 'S1'},
    'D2': {'multiplicity': 1, 'singular_on_orientifold': 'S2'},
}

# Pullbacks to the double cover X, for the informational double cover relation
#     2 chi(Y) = 4 chi(O) + 2 chi(D1 bar) + chi(D2 bar) - chi(S2 bar)
# "coefficient": the coefficient of chi(V bar) in the relation.
# chi(V bar) = 2 chi(V) - chi(V cap O) for V transverse to O; V inside O pulls back isomorphically.
double_cover = {
    'O': {'coefficient': 4, 'inside_orientifold': True},
    'D1': {'coefficient': 2, 'meets_orientifold': 'S1'},
    'D2': {'coefficient': 1, 'meets_orientifold_classes': [2, 2], 'tangent': True},  # (h = theta = 0), reduced
    'S2': {'coefficient': -1, 'inside_orientifold': True},
}
#########################################################


#########################################################
# Acceptance matrix
numeric_matrix = [('P1', 1), ('P1', 2), ('P2', 1), ('P2', 3), ('P3', 1), ('P3', 2), ('P3', 4)]
formal_dims = [1, 2, 3, 4]
#########################################################


#########################################################
# Oracle spaces for the "chi" command
oracle_spaces = {
    'P0': {'kind': 'projective', 'n': 0},
    'P1': {'kind': 'projective', 'n': 1},
    'P2': {'kind': 'projective', 'n': 2},
    'P3': {'kind': 'projective', 'n': 3},
    'P4': {'kind': 'projective', 'n': 4},
    'quadric-P3': {'kind': 'ci', 'n': 3, 'degrees': [2]},
    'cubic-P3': {'kind': 'ci', 'n': 3, 'degrees': [3]},
    'quartic-P3': {'kind': 'ci', 'n': 3, 'degrees': [4]},
    'ci22-P3': {'kind': 'ci', 'n': 3, 'degrees': [2, 2]},
    'cubic-P2': {'kind': 'ci', 'n': 2, 'degrees': [3]},
    'blowup-pt-P2': {'kind': 'blowup', 'n': 2, 'center': [1, 1]},
    'blowup-pt-P3': {'kind': 'blowup', 'n': 3, 'center': [1, 1, 1]},
    'nodal-quartic-P3': {'kind': 'a1', 'n': 3, 'degree': 4, 'center': [2, 2, 2]},
    'nodal-quartic-resolved-P3': {'kind': 'a1-resolved', 'n': 3, 'degree': 4, 'center': [2, 2, 2]},
}

oracle_expected = {
    'P0': 1,
    'P1': 2,
    'P2': 3,
    'P3': 4,
    'P4': 5,
    'quadric-P3': 4,
    'cubic-P3': 9,
    'quartic-P3': 24,
    'ci22-P3': 0,
    'cubic-P2': 0,
    'blowup-pt-P2': 4,
    'blowup-pt-P3': 6,
    'nodal-quartic-P3': 16,
    'nodal-quartic-resolved-P3': 24,
}
#########################################################


#########################################################
# Report notes
notes = {
    'delta_rule': (
        'delta on the resolved central fiber: value m on points of a single component, 0 otherwise; '
        'this gives coefficient -(m1+m2) on X. The printed form 1_calD1 + 1_calD2 - 1_X is the '
        '"paper-printed" variant.'
    ),
    'calD2_table': 'the calD2 pushforward is printed with a last term on S1; S2 is meant and used.',
    'double_cover': (
        'double cover relation 2 chi(Y) = 4 chi(O) + 2 chi(D1 bar) + chi(D2 bar) - chi(S2 bar) is informational: '
        'D2 pulls back tangentially to the ramification locus, the naive transverse numbers are shown.'
    ),
}
#########################################################
