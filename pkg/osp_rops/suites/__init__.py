# -*- coding: utf-8 -*-
"""Verification suite packages and helper modules."""
