"""Backend integration tests"""
