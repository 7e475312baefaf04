"""Desk-scale contrail segmentation toolkit.

Submodules
----------
npyio       NPY v1.0 array codec
falsecolor  ash false-color compositing and model input stacks
maskops     binary masks, RLE codec, components, labeling rules
metrics     confusion counts, Dice/IoU, dataset aggregation
autodiff    dense tensors with reverse-mode differentiation
models      tiny segmentation networks, AdamW, training loop
synth       deterministic synthetic scene generator
pipeline    fused inference, submissions, evaluation
cli         ``contrail`` command-line entry point
"""

__version__ = "0.1.0"
