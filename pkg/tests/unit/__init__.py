"""Unit tests package"""
