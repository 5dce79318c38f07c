import pytest

ts = pytest.importorskip("tokenswap")


def path_instance(n, start, target):
    tree = ts.Tree(n, [(v - 1, v) for v in range(1, n)])
    return ts.SequentialInstance(tree, start, target)


def test_apply_and_verify():
    inst = path_instance(3, [2, 0, 1], [0, 1, 2])
    config, cost = ts.apply_swap_sequence(inst, [(0, 1), (1, 2)])
    assert cost == 2
    check = ts.is_swap_solution(inst, [(0, 1), (1, 2)])
    assert check["yes"] == (config == [0, 1, 2])


def test_exact_solvers_agree_on_a_path():
    inst = path_instance(3, [2, 0, 1], [0, 1, 2])
    cost, witness = ts.exact_opt(inst)
    assert cost == ts.exact_path(inst) == 2
    assert ts.is_swap_solution(inst, witness)["yes"]


def test_star_sts_round_trip():
    sts = ts.StarSTSInstance(2, [1, 2, 1], [0, 2, 1])
    sol = ts.solve_star_sts(sts)
    assert sol == [True, True, True]
    assert ts.apply_subsequence(sts, sol) == [0, 2, 1]


def test_reductions_and_witnesses():
    sts = ts.StarSTSInstance(2, [1, 2], [0, 1, 2])
    sol = ts.solve_star_sts(sts)

    g = ts.build_unweighted_instance(sts, 2, 1)
    intended = ts.intended_solution(g, sol)
    assert ts.is_swap_solution(g.instance, intended)["yes"]
    assert len(ts.scaffold_solution(g)) == g.H

    pg = ts.build_parallel_instance(sts)
    fwd = ts.forward_parallel_solution(pg, sol)
    assert ts.is_round_solution(pg.instance, fwd)["yes"]
    assert ts.extract_star_sts_solution(pg, fwd) == sol


def test_vaughan_on_tkb():
    tkb = ts.generate_tkb(3, 3)
    result = ts.vaughan_solve(tkb.instance)
    assert result["D_initial"] == 3 * 3 * 4
    assert ts.is_swap_solution(tkb.instance, result["swaps"])["yes"]
    ub = ts.tkb_upper_bound_solution(3, 3)
    assert ts.is_swap_solution(tkb.instance, ub)["yes"]


def test_capacity_error():
    tkb = ts.generate_tkb(4, 3)
    with pytest.raises(ts.CapacityError):
        ts.exact_opt(tkb.instance, 10)
