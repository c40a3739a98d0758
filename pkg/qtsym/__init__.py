"""
Exact symmetric functions over Q(q,t,u)
"""
