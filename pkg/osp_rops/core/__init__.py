# -*- coding: utf-8 -*-
"""Exact algebra kernel: scalars, graded operators, oscillators, representations."""
