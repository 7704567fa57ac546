"""Field embeddings: homomorphism, preimages, and cache determinism."""

import random

from prigid.fields.embed import embed_field
from prigid.fields.fq import field_make


def test_embedding_is_a_homomorphism(f7, f343):
    emb = embed_field(f7, f343)
    rng = random.Random(3)
    for _ in range(50):
        a = rng.randrange(7)
        b = rng.randrange(7)
        assert emb.apply(f7.add(a, b)) == f343.add(emb.apply(a), emb.apply(b))
        assert emb.apply(f7.mul(a, b)) == f343.mul(emb.apply(a), emb.apply(b))
    assert emb.apply(f7.one) == f343.one


def test_preimage_roundtrip(f7, f343):
    emb = embed_field(f7, f343)
    for a in range(7):
        assert emb.preimage(emb.apply(a)) == a
    # an element outside the prime field has no preimage
    gen = f343.elem_from_code(7)
    assert emb.preimage(gen) is None


def test_tower_embedding_composes(f343):
    big = field_make(7, 9)
    emb = embed_field(f343, big)
    x = f343.elem_from_code(21)
    y = f343.elem_from_code(7)
    assert emb.apply(f343.mul(x, y)) == big.mul(emb.apply(x), emb.apply(y))
    assert emb.preimage(emb.apply(x)) == x


def test_embedding_is_cached_and_stable(f7, f343):
    a = embed_field(f7, f343)
    b = embed_field(f7, f343)
    assert a is b
    assert a.gen_image == embed_field(f7, f343).gen_image
