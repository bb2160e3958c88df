"""
Coxeter FC Analyzer - finite continuation of reflections in Coxeter groups
"""
