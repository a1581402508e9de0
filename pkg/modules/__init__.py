"""
Pluggable modules for the Steklov Average Toolkit
"""
