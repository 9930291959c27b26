import math

import leeisd


def test_version():
    assert leeisd.__version__ == "1.0.0"


def test_weight_counting_matches_binomials():
    assert leeisd.count_lee(150, 81) == math.comb(300, 81)
    assert leeisd.count_lee(3, 2) == 15
    assert leeisd.count_lee(4, 9) == 0
    assert leeisd.sum_count_lee(10, 1) == 20


def test_binary_image_is_a_weight_preserving_bijection():
    for x in ([0, 1, 2, 3], [3, 3, 0, 2, 1], [2] * 7):
        image = leeisd.gray_map(x)
        assert len(image) == 2 * len(x)
        assert sum(image) == leeisd.lee_weight(x)
        assert leeisd.gray_inverse(image) == x


def test_bounds_and_key_sizes():
    assert leeisd.gv_max_dim(150, 81) == 26
    assert leeisd.key_size_quaternary(150, 1, 50) == 5198
    assert leeisd.key_size_binary(300, 26) == 7124
    assert leeisd.rate(425, 55, 130) == "24/85"


def test_cost_estimate_matches_hand_checked_point():
    est = leeisd.estimate_f2(10, 4, 2, 1, 2, 2, 2)
    assert est["gauss"] == 396
    assert est["success_prob"] == "4/45"
    assert est["total_work"] == "9135/2"
    assert abs(est["security_bits"] - 12.1573) < 1e-3
    assert est["attainable"] is True


def test_table_headline_row():
    res = leeisd.table(150, 81)
    assert res["feasible"] is True
    assert res["dim"] == 26
    assert res["t"] == 40
    rows = res["rows"]
    assert len(rows) == 25
    assert rows[0]["k1"] == 1
    assert rows[0]["k2"] == 50
    assert rows[0]["key_size"] == 5198
    assert abs(rows[0]["security_bits"] - 112.04) < 0.01


def test_instance_decoding_round_trip():
    inst = None
    for seed in range(5, 40):
        candidate = leeisd.Instance("z4", 12, 2, 2, 2, seed=seed)
        if 2 not in candidate.planted:  # unit-only errors are reachable at v=1
            inst = candidate
            break
    assert inst is not None

    # The planted error is consistent with the published syndrome.
    syndrome = [
        sum(h * e for h, e in zip(row, inst.planted)) % 4 for row in inst.H
    ]
    assert syndrome == inst.s

    res = inst.decode(v=1, ell=1, seed=99)
    assert res["found"] is True
    assert res["iterations"] >= 1

    solutions = inst.brute_force()["by_weight"]
    assert inst.planted in solutions[2]
    assert res["e"] in solutions[2]


def test_scrambled_generator_system():
    kp = leeisd.McEliece(10, 2, 1, 1, seed=3)
    assert kp.t == 1
    assert kp.dmin >= 3
    assert kp.public_key_text().startswith("Z4MCELIECE-PUBLIC 10 2 1 1")
    x = [3, 0, 1]
    y = kp.encrypt(x, seed=4)
    assert kp.decrypt(y) == x
    report = kp.attack_self_test(seed=5)
    assert report["recovered"] is True
    assert report["expected_iterations"] > 0


def test_scrambled_syndrome_system():
    kp = leeisd.Niederreiter(10, 2, 1, 1, seed=6)
    assert kp.t == 1
    assert kp.public_key_text().startswith("Z4NIEDERREITER-PUBLIC 10 2 1 1")
    for pos, val in ((0, 1), (4, 3), (9, 1)):
        x = [0] * 10
        x[pos] = val
        assert kp.decrypt(kp.encrypt(x)) == x
    report = kp.attack_self_test(seed=9)
    assert report["recovered"]
    assert report["expected_iterations"] > 0
