import pytest
from hypothesis import given, strategies as st

from rowembed.embedding import Embedding, EmbeddingError, verify_embedding
from rowembed.oracles import three_partition
from rowembed.partition import (PartitionInstance, build_paddle_tree, check_groups,
                                extract_partition, format_partition, normalize_instance,
                                parse_partition, partition_witness, pathwidth_two_certificate)

UNIFORM = PartitionInstance((8,) * 6, 2)
SINGLE = PartitionInstance((8, 16, 24), 1)


class TestInstances:
    @pytest.mark.parametrize("raw,n,a,B", [
        ((1,) * 6, 2, (8,) * 6, 24), ((8,) * 6, 2, (8,) * 6, 24), ((1, 2, 3), 1, (8, 16, 24), 48),
    ])
    def test_normalize(self, raw, n, a, B):
        inst = normalize_instance(raw, n)
        assert inst.a == a and inst.B == B and inst.normalized

    @pytest.mark.parametrize("a,n", [((1, 2), 1), ((1, 1, 2), 2), ((0, 1, 2), 1), ((1, 1, 1, 1, 1, 2), 2)])
    def test_invalid(self, a, n):
        with pytest.raises(ValueError):
            PartitionInstance(a, n)

    def test_parse_round_trip(self):
        assert parse_partition(format_partition(UNIFORM)) == UNIFORM
        assert parse_partition("# two groups\n2\n8 8 8 8 8 8\n") == UNIFORM
        with pytest.raises(ValueError):
            parse_partition("2\n")

    def test_check_groups(self):
        check_groups(UNIFORM, [[0, 1, 2], [3, 4, 5]])
        for bad in ([[0, 1, 2]], [[0, 1, 2], [3, 4, 4]], [[0, 1], [2, 3, 4, 5]]):
            with pytest.raises(ValueError):
                check_groups(UNIFORM, bad)
        with pytest.raises(ValueError):
            check_groups(PartitionInstance((8, 8, 16, 8, 16, 16), 2), [[0, 1, 2], [3, 4, 5]])


class TestTree:
    def test_requires_normalized(self):
        with pytest.raises(ValueError):
            build_paddle_tree(PartitionInstance((1, 2, 3), 1))

    @pytest.mark.parametrize("inst", [UNIFORM, SINGLE])
    def test_formulas(self, inst):
        t = build_paddle_tree(inst)
        N = inst.n * (inst.B + 8)
        assert t.span == N
        assert len(t.left_blocker) == len(t.right_blocker) == N
        assert len(t.fold_gaps) == N // 8
        assert all(len(h) == N - 1 for h in t.handles)
        assert [len(b) for b in t.blades] == list(inst.a)
        assert t.tree.is_tree()
        assert pathwidth_two_certificate(t)
        assert t.star_leaves == 6 + 6 * inst.n

    def test_role_counts(self):
        t = build_paddle_tree(SINGLE)
        counts = t.role_counts()
        N = t.span
        assert counts["group-gap:l"] == 48
        assert counts["fold-gap:c"] == 3 * N // 8
        assert counts["paddle:handle"] == 3 * (N - 1)
        assert counts["anchor:c"] == 1
        c_total = sum(v for k, v in counts.items() if k.endswith(":c") or k.endswith("blade"))
        assert counts["leaf"] == 6 * c_total

    def test_c_vertices_have_six_leaves(self):
        t = build_paddle_tree(UNIFORM)
        assert all(len(ls) == 6 and t.tree.degree(v) >= 7 for v, ls in t.leaves.items())


class TestWitness:
    @pytest.mark.parametrize("inst,groups", [(UNIFORM, [[0, 1, 2], [3, 4, 5]]), (SINGLE, [[0, 1, 2]])])
    def test_witness_round_trip(self, inst, groups):
        t = build_paddle_tree(inst)
        emb = partition_witness(t, groups)
        assert verify_embedding(emb).ok
        assert emb.host.kind == "star" and emb.host.size == t.star_leaves
        back = extract_partition(t, emb)
        assert sorted(map(sorted, back)) == sorted(map(sorted, groups))

    def test_blade_ends_divisible_by_eight(self):
        t = build_paddle_tree(UNIFORM)
        emb = partition_witness(t, [[0, 4, 2], [3, 1, 5]])
        assert all((emb.map[b[0]][1] - 2 * t.span) % 8 == 0 for b in t.blades)

    def test_invalid_groups(self):
        t = build_paddle_tree(UNIFORM)
        with pytest.raises(ValueError):
            partition_witness(t, [[0, 1], [2, 3, 4, 5]])

    def test_shifted_blade_fails(self):
        t = build_paddle_tree(UNIFORM)
        emb = partition_witness(t, [[0, 1, 2], [3, 4, 5]])
        cells = list(emb.map)
        for v in t.blades[1]:
            for w in (v,) + t.leaves[v]:
                h, r = cells[w]
                cells[w] = (h, r + 1)
        moved = Embedding(emb.guest, emb.host, tuple(cells))
        assert not verify_embedding(moved).ok
        with pytest.raises(EmbeddingError):
            extract_partition(t, moved)

    def test_single_witness_rows(self):
        t = build_paddle_tree(SINGLE)
        emb = partition_witness(t, [[0, 1, 2]])
        used = {h for h, _ in emb.map}
        assert 0 in used and used <= set(range(t.star_leaves + 1))
        assert set(range(1, 7)) <= used

    @given(st.lists(st.sampled_from([8, 16, 24]), min_size=6, max_size=6))
    def test_random_two_group_instances(self, a):
        if sum(a) % 2:
            return
        inst = PartitionInstance(tuple(a), 2)
        t = build_paddle_tree(inst)
        rep = three_partition(inst)
        if rep.answer:
            emb = partition_witness(t, rep.witness)
            assert sorted(map(sorted, extract_partition(t, emb))) == sorted(map(sorted, rep.witness))
        else:
            assert rep.witness is None
