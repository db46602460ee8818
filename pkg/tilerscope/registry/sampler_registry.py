from tilerscope.samplers.chord_sampler import ChordSampler
from tilerscope.samplers.corner_sampler import CornerSampler
from tilerscope.samplers.random_sampler import RandomSampler
from tilerscope.samplers.shave_sampler import ShaveSampler

SAMPLER_ORDER = tuple(
    sampler.name
    for sampler in sorted((CornerSampler, ShaveSampler, ChordSampler, RandomSampler), key=lambda s: s.priority)
)


def get_sampler(name: str):
    key = name.lower()
    if key == "corner":
        return CornerSampler()
    if key == "shave":
        return ShaveSampler()
    if key == "chord":
        return ChordSampler()
    if key == "random":
        return RandomSampler()
    raise ValueError(f"No sampler named: {name}")
