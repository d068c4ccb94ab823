"""Exact 6-j and super 6-j symbol tables"""
