"""Companion invariants: domination, secure domination, matching, cover, independence, 2-packing"""
